//! The Iwahori-Hecke algebra over `Z[q]` in the standard basis `T_w`.
//!
//! Multiplication uses only the two defining rules
//! `T_x T_s = T_{xs}` when `l(xs) > l(x)` and
//! `T_x T_s = q T_{xs} + (q - 1) T_x` when `l(xs) < l(x)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::coxeter::{CoxeterSystem, Element};
use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// A finite sum `Σ c_w T_w` with no zero coefficients stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HeckeElt {
    terms: BTreeMap<Element, IntPoly>,
}

impl HeckeElt {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `T_w`.
    pub fn t_basis(w: Element) -> Self {
        Self::from_term(w, IntPoly::one())
    }

    pub fn from_term(w: Element, c: IntPoly) -> Self {
        let mut h = Self::zero();
        h.add_term(w, &c);
        h
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `T_w`; zero when absent.
    pub fn coeff(&self, w: Element) -> IntPoly {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    /// Terms in (length, word) order of the basis elements.
    pub fn terms(&self) -> impl Iterator<Item = (Element, &IntPoly)> {
        self.terms.iter().map(|(&w, c)| (w, c))
    }

    pub fn add_term(&mut self, w: Element, c: &IntPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_default();
        entry.add_assign_ref(c);
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w, c);
        }
        out
    }

    pub fn scale(&self, c: &IntPoly) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (w, d) in self.terms() {
            out.add_term(w, &(c * d));
        }
        out
    }
}

/// The Hecke algebra of a Coxeter system.
#[derive(Debug, Clone, Copy)]
pub struct HeckeAlgebra<'a> {
    sys: &'a CoxeterSystem,
}

impl<'a> HeckeAlgebra<'a> {
    pub fn new(sys: &'a CoxeterSystem) -> Self {
        Self { sys }
    }

    pub fn system(&self) -> &'a CoxeterSystem {
        self.sys
    }

    /// `h · T_s` for a 1-based generator `s`.
    pub fn mul_right_simple(&self, h: &HeckeElt, s: usize) -> HeckeElt {
        let sys = self.sys;
        let mut out = HeckeElt::zero();
        for (x, c) in h.terms() {
            let xs = sys.mul_gen(x, s);
            if sys.length(xs) > sys.length(x) {
                out.add_term(xs, c);
            } else {
                out.add_term(xs, &c.shift(1));
                out.add_term(x, &c.mul_q_minus_one());
            }
        }
        out
    }

    /// `h · T_z`, expanding `T_z` along the canonical reduced word of `z`.
    pub fn mul_basis(&self, h: &HeckeElt, z: Element) -> HeckeElt {
        self.sys
            .word(z)
            .into_iter()
            .fold(h.clone(), |acc, s| self.mul_right_simple(&acc, s))
    }

    /// `T_s · h` for a 1-based generator `s`.
    pub fn mul_left_simple(&self, s: usize, h: &HeckeElt) -> HeckeElt {
        let sys = self.sys;
        let mut out = HeckeElt::zero();
        for (x, c) in h.terms() {
            let sx = sys.gen_mul(s, x);
            if sys.length(sx) > sys.length(x) {
                out.add_term(sx, c);
            } else {
                out.add_term(sx, &c.shift(1));
                out.add_term(x, &c.mul_q_minus_one());
            }
        }
        out
    }

    /// `T_z · h`, applying the letters of `z` from the right.
    pub fn left_mul_basis(&self, z: Element, h: &HeckeElt) -> HeckeElt {
        self.sys
            .word(z)
            .into_iter()
            .rev()
            .fold(h.clone(), |acc, s| self.mul_left_simple(s, &acc))
    }

    /// General product, built from left multiplications of `b` by the terms of `a`.
    pub fn product(&self, a: &HeckeElt, b: &HeckeElt) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (x, c) in a.terms() {
            for (w, d) in self.left_mul_basis(x, b).terms() {
                out.add_term(w, &(d * c));
            }
        }
        out
    }

    /// All structure constants `N(w, w', ·)`, i.e. the expansion of `T_w T_{w'}`.
    pub fn basis_product(&self, w: Element, wp: Element) -> HeckeElt {
        self.mul_basis(&HeckeElt::t_basis(w), wp)
    }

    /// `N(w, w', w'')`: the coefficient of `T_{w''}` in `T_w T_{w'}`.
    pub fn structure_constant(&self, w: Element, wp: Element, wpp: Element) -> IntPoly {
        self.basis_product(w, wp).coeff(wpp)
    }

    /// `N(w, z, z)` for each candidate `z`, computed independently per `z`.
    /// The result keeps the order of `candidates`.
    pub fn diagonal_constants(&self, w: Element, candidates: &[Element]) -> Vec<IntPoly> {
        candidates
            .par_iter()
            .map(|&z| self.structure_constant(w, z, z))
            .collect()
    }

    /// Trace of left multiplication by `T_w` on the algebra: `Σ_z N(w, z, z)`.
    pub fn regular_trace(&self, w: Element) -> Result<IntPoly> {
        let all = self
            .sys
            .enumerate(None)
            .map_err(|_| Error::InfiniteGroup("the regular trace"))?;
        Ok(self
            .diagonal_constants(w, &all)
            .into_iter()
            .fold(IntPoly::zero(), |acc, n| acc + n))
    }
}

/// The Hecke algebra with `q` specialized to a fixed integer before any
/// multiplication takes place. Coefficients are plain integers.
#[derive(Debug, Clone, Copy)]
pub struct SpecializedHecke<'a> {
    sys: &'a CoxeterSystem,
    q: i64,
}

impl<'a> SpecializedHecke<'a> {
    pub fn new(sys: &'a CoxeterSystem, q: i64) -> Self {
        Self { sys, q }
    }

    fn mul_right_simple(
        &self,
        h: &BTreeMap<Element, BigInt>,
        s: usize,
    ) -> BTreeMap<Element, BigInt> {
        let mut out: BTreeMap<Element, BigInt> = BTreeMap::new();
        for (&x, c) in h {
            let xs = self.sys.mul_gen(x, s);
            if self.sys.length(xs) > self.sys.length(x) {
                *out.entry(xs).or_default() += c;
            } else {
                *out.entry(xs).or_default() += c * self.q;
                *out.entry(x).or_default() += c * (self.q - 1);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `T_w T_z` in the specialized algebra.
    pub fn basis_product(&self, w: Element, z: Element) -> BTreeMap<Element, BigInt> {
        let start = BTreeMap::from([(w, BigInt::from(1))]);
        self.sys
            .word(z)
            .into_iter()
            .fold(start, |acc, s| self.mul_right_simple(&acc, s))
    }

    /// Matrix of left multiplication by `T_w` in the basis `T_z`, rows and
    /// columns in enumeration order: column `z` holds `T_w T_z`.
    pub fn left_multiplication_matrix(&self, w: Element) -> Result<Vec<Vec<BigInt>>> {
        let all = self
            .sys
            .enumerate(None)
            .map_err(|_| Error::InfiniteGroup("the left multiplication matrix"))?;
        let n = all.len();
        let mut m = vec![vec![BigInt::zero(); n]; n];
        let columns: Vec<_> = all.par_iter().map(|&z| self.basis_product(w, z)).collect();
        for (col, prod) in columns.into_iter().enumerate() {
            for (x, c) in prod {
                let row = x.index().expect("finite system");
                m[row][col] = c;
            }
        }
        Ok(m)
    }

    pub fn trace(&self, w: Element) -> Result<BigInt> {
        let m = self.left_multiplication_matrix(w)?;
        Ok((0..m.len()).map(|i| m[i][i].clone()).sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(c.iter().copied())
    }

    fn sys(s: &str) -> CoxeterSystem {
        CoxeterSystem::build(s).unwrap()
    }

    #[test]
    fn t_basis_examples() {
        let a2 = sys("A2");
        let e = HeckeElt::t_basis(a2.identity());
        assert_eq!(e.len(), 1);
        assert_eq!(e.coeff(a2.identity()), IntPoly::one());
        let s1 = a2.generator(1).unwrap();
        assert_eq!(HeckeElt::t_basis(s1).coeff(s1), IntPoly::one());
        assert!(HeckeElt::t_basis(s1).coeff(a2.identity()).is_zero());
    }

    #[test]
    fn quadratic_relation() {
        let a2 = sys("A2");
        let h = HeckeAlgebra::new(&a2);
        let s1 = a2.generator(1).unwrap();
        let sq = h.mul_right_simple(&HeckeElt::t_basis(s1), 1);
        assert_eq!(sq.len(), 2);
        assert_eq!(sq.coeff(a2.identity()), IntPoly::q());
        assert_eq!(sq.coeff(s1), IntPoly::q_minus_one());

        let up = h.mul_right_simple(&HeckeElt::t_basis(s1), 2);
        assert_eq!(up, HeckeElt::t_basis(a2.normal_form(&[1, 2]).unwrap()));

        let qe = HeckeElt::from_term(a2.identity(), IntPoly::q());
        assert_eq!(
            h.mul_right_simple(&qe, 1),
            HeckeElt::from_term(s1, IntPoly::q())
        );
    }

    #[test]
    fn left_and_right_expansions_agree() {
        for name in ["B3", "I2(5)"] {
            let g = sys(name);
            let h = HeckeAlgebra::new(&g);
            let all = g.enumerate(None).unwrap();
            for &x in &all {
                for &y in &all {
                    assert_eq!(
                        h.left_mul_basis(x, &HeckeElt::t_basis(y)),
                        h.basis_product(x, y)
                    );
                }
            }
        }
    }

    #[test]
    fn product_examples() {
        let a2 = sys("A2");
        let h = HeckeAlgebra::new(&a2);
        let w = a2.normal_form(&[1, 2]).unwrap();
        let s1 = a2.generator(1).unwrap();
        let s2 = a2.generator(2).unwrap();
        assert_eq!(
            h.product(&HeckeElt::t_basis(w), &HeckeElt::t_basis(a2.identity())),
            HeckeElt::t_basis(w)
        );
        let prod = h.product(&HeckeElt::t_basis(w), &HeckeElt::t_basis(s2));
        let mut expected = HeckeElt::from_term(s1, IntPoly::q());
        expected.add_term(w, &IntPoly::q_minus_one());
        assert_eq!(prod, expected);

        let a1 = sys("A1");
        let h1 = HeckeAlgebra::new(&a1);
        let s = a1.generator(1).unwrap();
        let prod = h1.product(&HeckeElt::t_basis(s), &HeckeElt::t_basis(s));
        assert_eq!(prod.coeff(a1.identity()), IntPoly::q());
        assert_eq!(prod.coeff(s), IntPoly::q_minus_one());
    }

    #[test]
    fn structure_constant_examples() {
        let a2 = sys("A2");
        let h = HeckeAlgebra::new(&a2);
        let s1 = a2.generator(1).unwrap();
        let s2 = a2.generator(2).unwrap();
        let e = a2.identity();
        assert_eq!(h.structure_constant(s1, s1, s1), p(&[-1, 1]));
        for w in a2.enumerate(None).unwrap() {
            for z in a2.enumerate(None).unwrap() {
                let n = h.structure_constant(w, e, z);
                assert_eq!(
                    n,
                    if z == w {
                        IntPoly::one()
                    } else {
                        IntPoly::zero()
                    }
                );
            }
        }
        let s1s2 = a2.normal_form(&[1, 2]).unwrap();
        assert_eq!(h.structure_constant(s1s2, s2, s1), IntPoly::q());
    }

    #[test]
    fn regular_trace_examples() {
        let a1 = sys("A1");
        let h = HeckeAlgebra::new(&a1);
        assert_eq!(
            h.regular_trace(a1.identity()).unwrap(),
            IntPoly::constant(2)
        );
        assert_eq!(
            h.regular_trace(a1.generator(1).unwrap()).unwrap(),
            p(&[-1, 1])
        );

        let a2 = sys("A2");
        let h = HeckeAlgebra::new(&a2);
        assert_eq!(
            h.regular_trace(a2.identity()).unwrap(),
            IntPoly::constant(6)
        );
        assert_eq!(
            h.regular_trace(a2.generator(1).unwrap()).unwrap(),
            p(&[-3, 3])
        );

        let inf = sys("I2(inf)");
        let h = HeckeAlgebra::new(&inf);
        assert!(matches!(
            h.regular_trace(inf.identity()),
            Err(Error::InfiniteGroup(_))
        ));
    }

    #[test]
    fn infinite_dihedral_products_are_exact() {
        let inf = sys("I2(inf)");
        let h = HeckeAlgebra::new(&inf);
        let w = inf.normal_form(&[1, 2, 1]).unwrap();
        let z = inf.normal_form(&[1, 2]).unwrap();
        // T_{s1s2s1} T_{s1} T_{s2} = q^2 T_{s1} + (q^2 - q) T_{s1s2} + (q - 1) T_{s1s2s1s2}
        let prod = h.basis_product(w, z);
        assert_eq!(prod.coeff(inf.generator(1).unwrap()), p(&[0, 0, 1]));
        assert_eq!(prod.coeff(z), p(&[0, -1, 1]));
        assert_eq!(
            prod.coeff(inf.normal_form(&[1, 2, 1, 2]).unwrap()),
            p(&[-1, 1])
        );
        assert_eq!(prod.len(), 3);
    }

    #[test]
    fn specialized_matches_evaluation() {
        let a2 = sys("A2");
        let h = HeckeAlgebra::new(&a2);
        for q in [-1i64, 0, 2, 5] {
            let hs = SpecializedHecke::new(&a2, q);
            for w in a2.enumerate(None).unwrap() {
                assert_eq!(hs.trace(w).unwrap(), h.regular_trace(w).unwrap().eval(q));
            }
        }
    }
}
