//! Complete flags in `F_q^n` for a prime `q`, their relative position in the
//! symmetric group `S_n = W(A_{n-1})`, and brute-force counts of the pieces
//! `Y_{s,w}`, `Y_{s,w} ∩ C_{B,z}` and `Z_{B,B',w}`.
//!
//! A flag is stored as an invertible matrix whose first `i` columns span
//! `V_i`, in a canonical column-reduced form (see [`Flag::canonical`]).
//! Relative positions use the convention `pos(E, P_w E) = w`, where `E` is
//! the standard flag and `P_w e_k = e_{w(k)}`; generator `s_i` is the
//! transposition `(i, i+1)`.

use std::collections::HashMap;
use std::fmt::Write as _;

use itertools::Itertools;
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::coxeter::{CoxeterSystem, CoxeterType, Element};
use crate::error::{Error, Result};
use crate::hecke::HeckeAlgebra;

fn is_prime(q: u32) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

fn inv_mod(a: u32, q: u32) -> u32 {
    // Fermat; q is prime and a != 0.
    let (mut base, mut exp, mut acc) = (u64::from(a), q - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % u64::from(q);
        }
        base = base * base % u64::from(q);
        exp >>= 1;
    }
    acc as u32
}

/// Incremental row-echelon basis over `F_q`, used for ranks of column spans.
struct Echelon {
    q: u32,
    /// Pairs (pivot position, vector with 1 at pivot).
    rows: Vec<(usize, Vec<u32>)>,
}

impl Echelon {
    fn new(q: u32) -> Self {
        Self {
            q,
            rows: Vec::new(),
        }
    }

    /// Adds `v` to the span; returns whether it was independent.
    fn insert(&mut self, mut v: Vec<u32>) -> bool {
        let q = u64::from(self.q);
        for (p, row) in &self.rows {
            let c = u64::from(v[*p]);
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = ((u64::from(*x) + (q - c) * u64::from(r)) % q) as u32;
                }
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => false,
            Some(p) => {
                let inv = u64::from(inv_mod(v[p], self.q));
                for x in v.iter_mut() {
                    *x = (u64::from(*x) * inv % q) as u32;
                }
                self.rows.push((p, v));
                true
            }
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// A complete flag `0 ⊂ V_1 ⊂ ... ⊂ V_{n-1} ⊂ F_q^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Flag {
    n: usize,
    /// Row-major `n × n` matrix; column `j` is the `j`-th basis vector.
    entries: Vec<u32>,
}

impl Flag {
    /// Canonical representative of the flag spanned by the columns of an
    /// invertible row-major matrix.
    ///
    /// Columns are reduced left to right by earlier columns: afterwards each
    /// column's lowest nonzero entry (its pivot) is `1`, and every later
    /// column vanishes in that row. Errors if the columns are dependent.
    pub fn canonical(n: usize, q: u32, matrix: &[u32]) -> Result<Flag> {
        if matrix.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: matrix.len(),
            });
        }
        let q64 = u64::from(q);
        let mut cols: Vec<Vec<u32>> = (0..n)
            .map(|j| (0..n).map(|i| matrix[i * n + j] % q).collect())
            .collect();
        let mut pivots: Vec<usize> = Vec::with_capacity(n);
        for j in 0..n {
            let (done, rest) = cols.split_at_mut(j);
            let col = &mut rest[0];
            for (k, &p) in pivots.iter().enumerate() {
                let c = u64::from(col[p]);
                if c != 0 {
                    for (x, &y) in col.iter_mut().zip(&done[k]) {
                        *x = ((u64::from(*x) + (q64 - c) * u64::from(y)) % q64) as u32;
                    }
                }
            }
            let p = col
                .iter()
                .rposition(|&x| x != 0)
                .ok_or_else(|| Error::Internal("flag matrix is singular".into()))?;
            let inv = u64::from(inv_mod(col[p], q));
            for x in col.iter_mut() {
                *x = (u64::from(*x) * inv % q64) as u32;
            }
            pivots.push(p);
        }
        let mut entries = vec![0; n * n];
        for (j, col) in cols.iter().enumerate() {
            for (i, &x) in col.iter().enumerate() {
                entries[i * n + j] = x;
            }
        }
        Ok(Flag { n, entries })
    }

    /// The coordinate flag `V_j = span(e_{p(1)}, ..., e_{p(j)})` for a
    /// 0-based permutation `p`.
    pub fn coordinate(perm: &[usize]) -> Flag {
        let n = perm.len();
        let mut entries = vec![0; n * n];
        for (j, &i) in perm.iter().enumerate() {
            entries[i * n + j] = 1;
        }
        Flag { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.n).map(|i| self.entries[i * self.n + j]).collect()
    }

    /// `g · F` for a diagonal `g`.
    fn scale_rows(&self, diag: &[u32], q: u32) -> Vec<u32> {
        let n = self.n;
        (0..n * n)
            .map(|k| ((u64::from(self.entries[k]) * u64::from(diag[k / n])) % u64::from(q)) as u32)
            .collect()
    }
}

/// Relative position as a 0-based permutation `w` with `w(j) = i` exactly
/// when `dim(V_i ∩ V'_j)` jumps at `(i, j)`.
#[allow(clippy::needless_range_loop)]
pub fn position_permutation(q: u32, f: &Flag, g: &Flag) -> Vec<usize> {
    let n = f.n;
    // d[i][j] = dim(V_i ∩ V'_j) = i + j - dim(V_i + V'_j)
    let mut d = vec![vec![0usize; n + 1]; n + 1];
    let gcols: Vec<Vec<u32>> = (0..n).map(|j| g.column(j)).collect();
    for i in 0..=n {
        let mut ech = Echelon::new(q);
        for k in 0..i {
            ech.insert(f.column(k));
        }
        for j in 1..=n {
            ech.insert(gcols[j - 1].clone());
            d[i][j] = i + j - ech.rank();
        }
    }
    let mut perm = vec![usize::MAX; n];
    for i in 1..=n {
        for j in 1..=n {
            let r = d[i][j] + d[i - 1][j - 1] - d[i - 1][j] - d[i][j - 1];
            if r == 1 {
                perm[j - 1] = i - 1;
            }
        }
    }
    perm
}

/// Permutation of `{0..n}` attached to a word: `s_{a1} ∘ ... ∘ s_{ak}`.
fn word_permutation(n: usize, word: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for &a in word {
        p.swap(a - 1, a);
    }
    p
}

/// Exhaustive model of the flag variety of `GL_n` over `F_q`.
#[derive(Debug)]
pub struct FlagSpace {
    n: usize,
    q: u32,
    flags: Vec<Flag>,
    weyl: CoxeterSystem,
    perm_to_element: HashMap<Vec<usize>, Element>,
    element_to_perm: HashMap<Element, Vec<usize>>,
}

/// `[n]_q! = Π_{k=1}^{n-1} (1 + q + ... + q^k)`.
pub fn q_factorial(n: usize, q: u64) -> u64 {
    (1..n)
        .map(|k| (0..=k as u32).map(|e| q.pow(e)).sum::<u64>())
        .product()
}

impl FlagSpace {
    pub fn build(n: usize, q: u32) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if n < 2 || n as u64 > u64::from(q) - 1 {
            return Err(Error::DimensionOutOfRange { n, q });
        }
        let weyl = CoxeterSystem::from_type(CoxeterType::A(n - 1))?;
        let mut perm_to_element = HashMap::new();
        let mut element_to_perm = HashMap::new();
        for e in weyl.enumerate(None)? {
            let p = word_permutation(n, &weyl.word(e));
            perm_to_element.insert(p.clone(), e);
            element_to_perm.insert(e, p);
        }

        let flags = enumerate_flags(n, q);
        let expected = q_factorial(n, u64::from(q));
        if flags.len() as u64 != expected {
            return Err(Error::Internal(format!(
                "enumerated {} flags, expected [n]_q! = {expected}",
                flags.len()
            )));
        }
        Ok(Self {
            n,
            q,
            flags,
            weyl,
            perm_to_element,
            element_to_perm,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    /// The Weyl group `A_{n-1}`.
    pub fn weyl(&self) -> &CoxeterSystem {
        &self.weyl
    }

    /// `diag(1, 2, ..., n)`, regular semisimple since `n < q`.
    pub fn default_torus_element(&self) -> Vec<u32> {
        (1..=self.n as u32).collect()
    }

    pub fn standard_flag(&self) -> Flag {
        Flag::coordinate(&(0..self.n).collect::<Vec<_>>())
    }

    /// The coordinate flag `P_w E`.
    pub fn coordinate_flag(&self, w: Element) -> Flag {
        Flag::coordinate(&self.element_to_perm[&w])
    }

    pub fn permutation(&self, w: Element) -> &[usize] {
        &self.element_to_perm[&w]
    }

    pub fn relative_position(&self, f: &Flag, g: &Flag) -> Element {
        let perm = position_permutation(self.q, f, g);
        self.perm_to_element[&perm]
    }

    fn check_regular(&self, s: &[u32]) -> Result<()> {
        if s.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: s.len(),
            });
        }
        let reduced: Vec<u32> = s.iter().map(|&x| x % self.q).collect();
        if reduced.contains(&0) || !reduced.iter().all_unique() {
            return Err(Error::NotRegularSemisimple(s.to_vec()));
        }
        Ok(())
    }

    /// `s F s^{-1}`, i.e. the flag with basis `s e_j`.
    pub fn conjugate(&self, s: &[u32], f: &Flag) -> Flag {
        Flag::canonical(self.n, self.q, &f.scale_rows(s, self.q)).expect("s is invertible")
    }

    /// Flags fixed by the diagonal element `s`, found by scanning.
    pub fn torus_fixed_flags(&self, s: &[u32]) -> Result<Vec<Flag>> {
        self.check_regular(s)?;
        Ok(self
            .flags
            .iter()
            .filter(|f| &self.conjugate(s, f) == *f)
            .cloned()
            .collect())
    }

    fn count_where(&self, pred: impl Fn(&Flag) -> bool + Sync) -> u64 {
        self.flags.par_iter().filter(|f| pred(f)).count() as u64
    }

    /// `#{B'' : pos(B, B'') = z, pos(B'', s B'' s^{-1}) = w}`.
    pub fn count_y_cell(&self, s: &[u32], b: &Flag, z: Element, w: Element) -> Result<u64> {
        self.check_regular(s)?;
        if &self.conjugate(s, b) != b {
            return Err(Error::NotTorusFixed);
        }
        Ok(self.count_where(|f| {
            self.relative_position(b, f) == z
                && self.relative_position(f, &self.conjugate(s, f)) == w
        }))
    }

    /// `#{B'' : pos(B, B'') = pos(B, B'), pos(B', B'') = w}`.
    pub fn count_z(&self, b: &Flag, bp: &Flag, w: Element) -> u64 {
        let z = self.relative_position(b, bp);
        self.count_where(|f| {
            self.relative_position(b, f) == z && self.relative_position(bp, f) == w
        })
    }

    /// `#{B : pos(B, s B s^{-1}) = w}`.
    pub fn count_y_total(&self, s: &[u32], w: Element) -> Result<u64> {
        self.check_regular(s)?;
        Ok(self.count_where(|f| self.relative_position(f, &self.conjugate(s, f)) == w))
    }

    /// The torus-fixed flag `B'` with `pos(B, B') = z`, for `B` torus-fixed.
    pub fn torus_fixed_at(&self, s: &[u32], b: &Flag, z: Element) -> Result<Flag> {
        self.torus_fixed_flags(s)?
            .into_iter()
            .find(|f| self.relative_position(b, f) == z)
            .ok_or(Error::NotTorusFixed)
    }

    /// Checks every count identity for this space against the Hecke side
    /// and returns one row per `(w, z)` plus one `total` row per `w`.
    pub fn count_report(&self) -> Result<Vec<CountRow>> {
        let s = self.default_torus_element();
        let b = self.standard_flag();
        let hecke = HeckeAlgebra::new(&self.weyl);
        let q = BigInt::from(self.q);
        let mut rows = Vec::new();
        for w in self.weyl.enumerate(None)? {
            for z in self.weyl.enumerate(None)? {
                let zi = self.weyl.inverse(z);
                let predicted = hecke.structure_constant(w, zi, zi).eval(q.clone());
                let bp = self.torus_fixed_at(&s, &b, z)?;
                let cell = self.count_y_cell(&s, &b, z, w)?;
                let zcount = self.count_z(&b, &bp, w);
                rows.push(CountRow {
                    n: self.n,
                    q: self.q,
                    w: self.weyl.word(w),
                    z: Some(self.weyl.word(z)),
                    observed: cell,
                    predicted: predicted.to_string(),
                    z_count: Some(zcount),
                    matched: BigInt::from(cell) == predicted && zcount == cell,
                });
            }
            let predicted = hecke.regular_trace(w)?.eval(q.clone());
            let total = self.count_y_total(&s, w)?;
            rows.push(CountRow {
                n: self.n,
                q: self.q,
                w: self.weyl.word(w),
                z: None,
                observed: total,
                predicted: predicted.to_string(),
                z_count: None,
                matched: BigInt::from(total) == predicted,
            });
        }
        Ok(rows)
    }
}

/// All canonical flags, generated directly: for each pivot permutation,
/// column `j` has `1` at its pivot row, zeros below it and at earlier pivot
/// rows, and free entries elsewhere above the pivot.
fn enumerate_flags(n: usize, q: u32) -> Vec<Flag> {
    let mut out = Vec::new();
    for pivots in (0..n).permutations(n) {
        let mut free = Vec::new();
        for (j, &p) in pivots.iter().enumerate() {
            for r in 0..p {
                if !pivots[..j].contains(&r) {
                    free.push(r * n + j);
                }
            }
        }
        let mut base = vec![0u32; n * n];
        for (j, &p) in pivots.iter().enumerate() {
            base[p * n + j] = 1;
        }
        let total = (q as usize).pow(free.len() as u32);
        for mut code in 0..total {
            let mut entries = base.clone();
            for &slot in &free {
                entries[slot] = (code % q as usize) as u32;
                code /= q as usize;
            }
            out.push(Flag { n, entries });
        }
    }
    out
}

/// One line of a count report. `z = None` is the `total` row comparing
/// `#Y_{s,w}` with the regular trace. For cell rows `observed` is
/// `#(Y_{s,w} ∩ C_{B,z})`, `z_count` is `#Z_{B,B',w}`, and the row matches
/// only when both equal the prediction `N(w, z^-1, z^-1)(q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: usize,
    pub q: u32,
    pub w: Vec<usize>,
    pub z: Option<Vec<usize>>,
    pub observed: u64,
    pub predicted: String,
    pub z_count: Option<u64>,
    pub matched: bool,
}

fn word_field(w: &[usize]) -> String {
    w.iter().join(" ")
}

/// CSV with header `n,q,w,z,observed,predicted,match`; words are
/// space-separated generator indices.
pub fn count_rows_csv(rows: &[CountRow]) -> String {
    let mut out = String::from("n,q,w,z,observed,predicted,match\n");
    for r in rows {
        let z = r.z.as_deref().map_or("total".to_string(), word_field);
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.n,
            r.q,
            word_field(&r.w),
            z,
            r.observed,
            r.predicted,
            u8::from(r.matched)
        )
        .expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_examples() {
        assert_eq!(FlagSpace::build(2, 3).unwrap().flags().len(), 4);
        assert_eq!(FlagSpace::build(3, 5).unwrap().flags().len(), 186);
        assert!(matches!(
            FlagSpace::build(2, 2),
            Err(Error::DimensionOutOfRange { .. })
        ));
        assert!(matches!(FlagSpace::build(2, 9), Err(Error::NotPrime(9))));
        assert!(matches!(
            FlagSpace::build(5, 5),
            Err(Error::DimensionOutOfRange { .. })
        ));
    }

    #[test]
    fn canonical_form_is_unique() {
        let sp = FlagSpace::build(3, 5).unwrap();
        for f in sp.flags() {
            assert_eq!(&Flag::canonical(3, 5, f.entries()).unwrap(), f);
        }
        let unique: std::collections::HashSet<_> = sp.flags().iter().collect();
        assert_eq!(unique.len(), sp.flags().len());
        // Right multiplication by an upper-triangular matrix keeps the flag.
        let f = &sp.flags()[100];
        let upper = [2u32, 3, 1, 0, 4, 2, 0, 0, 3];
        let mut prod = vec![0u32; 9];
        for i in 0..3 {
            for j in 0..3 {
                prod[i * 3 + j] = (0..3)
                    .map(|k| f.entries()[i * 3 + k] * upper[k * 3 + j])
                    .sum::<u32>()
                    % 5;
            }
        }
        assert_eq!(&Flag::canonical(3, 5, &prod).unwrap(), f);
        assert!(Flag::canonical(2, 5, &[1, 2, 2, 4]).is_err());
    }

    #[test]
    fn relative_position_examples() {
        let sp = FlagSpace::build(2, 3).unwrap();
        let weyl = sp.weyl();
        let e1 = Flag::coordinate(&[0, 1]);
        let e2 = Flag::coordinate(&[1, 0]);
        assert_eq!(sp.relative_position(&e1, &e1), weyl.identity());
        assert_eq!(sp.relative_position(&e1, &e2), weyl.generator(1).unwrap());

        let sp3 = FlagSpace::build(3, 5).unwrap();
        let std = sp3.standard_flag();
        let rev = Flag::coordinate(&[2, 1, 0]);
        assert_eq!(
            sp3.relative_position(&std, &rev),
            sp3.weyl().longest_element().unwrap()
        );
        for f in sp3.flags().iter().step_by(17) {
            assert_eq!(sp3.relative_position(f, f), sp3.weyl().identity());
        }
    }

    #[test]
    fn coordinate_flags_realize_their_position() {
        let sp = FlagSpace::build(3, 5).unwrap();
        for w in sp.weyl().enumerate(None).unwrap() {
            assert_eq!(
                sp.relative_position(&sp.standard_flag(), &sp.coordinate_flag(w)),
                w
            );
        }
    }

    #[test]
    fn torus_fixed_examples() {
        let sp = FlagSpace::build(2, 3).unwrap();
        let fixed = sp.torus_fixed_flags(&[1, 2]).unwrap();
        assert_eq!(
            fixed,
            vec![Flag::coordinate(&[0, 1]), Flag::coordinate(&[1, 0])]
        );
        let sp3 = FlagSpace::build(3, 5).unwrap();
        assert_eq!(sp3.torus_fixed_flags(&[1, 2, 3]).unwrap().len(), 6);
        assert_eq!(sp3.torus_fixed_flags(&[4, 1, 3]).unwrap().len(), 6);
        assert!(matches!(
            sp3.torus_fixed_flags(&[1, 1, 2]),
            Err(Error::NotRegularSemisimple(_))
        ));
        assert!(matches!(
            sp3.torus_fixed_flags(&[1, 5, 2]),
            Err(Error::NotRegularSemisimple(_))
        ));
    }

    #[test]
    fn count_examples_gl2_f3() {
        let sp = FlagSpace::build(2, 3).unwrap();
        let weyl = sp.weyl();
        let (e, s1) = (weyl.identity(), weyl.generator(1).unwrap());
        let b = Flag::coordinate(&[0, 1]);
        let bp = Flag::coordinate(&[1, 0]);
        let s = [1, 2];
        assert_eq!(sp.count_y_cell(&s, &b, s1, s1).unwrap(), 2);
        assert_eq!(sp.count_y_cell(&s, &b, e, s1).unwrap(), 0);
        assert_eq!(sp.count_y_cell(&s, &b, e, e).unwrap(), 1);
        assert_eq!(sp.count_z(&b, &bp, s1), 2);
        assert_eq!(sp.count_y_total(&s, e).unwrap(), 2);
        assert_eq!(sp.count_y_total(&s, s1).unwrap(), 2);
        let line = Flag::canonical(2, 3, &[1, 0, 1, 1]).unwrap();
        assert!(matches!(
            sp.count_y_cell(&s, &line, s1, s1),
            Err(Error::NotTorusFixed)
        ));
    }

    #[test]
    fn count_z_with_equal_flags_is_a_point() {
        // z = pos(B, B) = 1 forces B'' = B.
        let sp = FlagSpace::build(3, 5).unwrap();
        let b = sp.standard_flag();
        for w in sp.weyl().enumerate(None).unwrap() {
            let expected = u64::from(w == sp.weyl().identity());
            assert_eq!(sp.count_z(&b, &b, w), expected);
        }
    }

    #[test]
    fn cells_have_size_q_to_the_length() {
        let sp = FlagSpace::build(3, 5).unwrap();
        let weyl = sp.weyl();
        for f in sp.flags() {
            let mut sizes: HashMap<Element, u64> = HashMap::new();
            for g in sp.flags() {
                *sizes.entry(sp.relative_position(f, g)).or_default() += 1;
            }
            for w in weyl.enumerate(None).unwrap() {
                assert_eq!(sizes[&w], 5u64.pow(weyl.length(w) as u32));
            }
        }
    }

    #[test]
    fn position_reverses_to_inverse() {
        for (n, q) in [(2, 3), (3, 5)] {
            let sp = FlagSpace::build(n, q).unwrap();
            for f in sp.flags() {
                for g in sp.flags() {
                    let fg = sp.relative_position(f, g);
                    assert_eq!(sp.relative_position(g, f), sp.weyl().inverse(fg));
                }
            }
        }
    }

    #[test]
    fn y_totals_partition_the_space() {
        let sp = FlagSpace::build(3, 5).unwrap();
        let s = sp.default_torus_element();
        let total: u64 = sp
            .weyl()
            .enumerate(None)
            .unwrap()
            .into_iter()
            .map(|w| sp.count_y_total(&s, w).unwrap())
            .sum();
        assert_eq!(total, 186);
    }

    #[test]
    fn csv_layout() {
        let sp = FlagSpace::build(2, 3).unwrap();
        let csv = count_rows_csv(&sp.count_report().unwrap());
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,q,w,z,observed,predicted,match");
        assert_eq!(lines.len(), 1 + 2 * 3);
        assert!(lines.contains(&"2,3,1,1,2,2,1"));
        assert!(lines.contains(&"2,3,1,total,2,2,1"));
        assert!(lines.contains(&"2,3,,total,2,2,1"));
    }

    #[test]
    fn q_factorial_values() {
        assert_eq!(q_factorial(2, 3), 4);
        assert_eq!(q_factorial(3, 5), 186);
        assert_eq!(q_factorial(4, 7), 8 * 57 * 400);
    }
}
