//! Independent reference models used by the integration tests. Nothing here
//! calls into the library's multiplication or ordering code; elements are
//! translated through their reduced words only.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use coxeter_hecke::{CoxeterSystem, Element, IntPoly};

/// One-line notation of `s_{a1} ... s_{ak}` in `S_n`: swap positions for each letter.
pub fn one_line(n: usize, word: &[usize]) -> Vec<u8> {
    let mut p: Vec<u8> = (0..n as u8).collect();
    for &a in word {
        p.swap(a - 1, a);
    }
    p
}

pub fn inversions(p: &[u8]) -> usize {
    (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count()
}

/// A reduced word for `p`, found by bubble sort.
pub fn perm_reduced_word(p: &[u8]) -> Vec<usize> {
    let mut p = p.to_vec();
    let mut word = Vec::new();
    while let Some(i) = (1..p.len()).find(|&i| p[i - 1] > p[i]) {
        p.swap(i - 1, i);
        word.push(i);
    }
    word.reverse();
    word
}

/// Tableau criterion: `a <= b` iff every sorted prefix of `a` is dominated by that of `b`.
pub fn perm_bruhat_leq(a: &[u8], b: &[u8]) -> bool {
    (1..a.len()).all(|k| {
        let mut x = a[..k].to_vec();
        let mut y = b[..k].to_vec();
        x.sort_unstable();
        y.sort_unstable();
        x.iter().zip(&y).all(|(u, v)| u <= v)
    })
}

/// Small dense polynomial, ascending coefficients, trimmed.
pub type Poly = Vec<i64>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add_into(acc: &mut Poly, p: &[i64], shift: usize, scale: i64) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += scale * c;
    }
}

/// Hecke algebra of `S_n` on one-line permutations.
pub type PermHecke = HashMap<Vec<u8>, Poly>;

pub fn perm_mul_simple(h: &PermHecke, s: usize) -> PermHecke {
    let mut out: PermHecke = HashMap::new();
    for (x, c) in h {
        let mut xs = x.clone();
        xs.swap(s - 1, s);
        if x[s - 1] < x[s] {
            add_into(out.entry(xs).or_default(), c, 0, 1);
        } else {
            // T_x T_s = q T_{xs} + (q - 1) T_x
            add_into(out.entry(xs).or_default(), c, 1, 1);
            let e = out.entry(x.clone()).or_default();
            add_into(e, c, 1, 1);
            add_into(e, c, 0, -1);
        }
    }
    out.into_iter()
        .map(|(k, v)| (k, trim(v)))
        .filter(|(_, v)| !v.is_empty())
        .collect()
}

pub fn perm_basis_product(x: &[u8], y: &[u8]) -> PermHecke {
    let mut h: PermHecke = HashMap::from([(x.to_vec(), vec![1])]);
    for s in perm_reduced_word(y) {
        h = perm_mul_simple(&h, s);
    }
    h
}

pub fn poly_to_i64(p: &IntPoly) -> Poly {
    p.to_i64_coeffs().expect("small coefficients")
}

/// The library element with the given one-line notation.
pub fn from_one_line(sys: &CoxeterSystem, p: &[u8]) -> Element {
    sys.normal_form(&perm_reduced_word(p)).unwrap()
}

pub fn to_one_line(sys: &CoxeterSystem, x: Element) -> Vec<u8> {
    one_line(sys.rank() + 1, &sys.word(x))
}

/// All elements below `b` in Bruhat order: products of subwords of a reduced word.
pub fn subword_closure(sys: &CoxeterSystem, b: Element) -> BTreeSet<Element> {
    let word = sys.word(b);
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << word.len()) {
        let sub: Vec<usize> = (0..word.len())
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| word[i])
            .collect();
        out.insert(sys.normal_form(&sub).unwrap());
    }
    out
}

/// Distinct products of the generators taken once each, in every order.
pub fn coxeter_elements_by_orders(sys: &CoxeterSystem) -> BTreeSet<Element> {
    fn permutations(items: Vec<usize>) -> Vec<Vec<usize>> {
        if items.len() <= 1 {
            return vec![items];
        }
        let mut out = Vec::new();
        for i in 0..items.len() {
            let mut rest = items.clone();
            let head = rest.remove(i);
            for mut tail in permutations(rest) {
                tail.insert(0, head);
                out.push(tail);
            }
        }
        out
    }
    permutations((1..=sys.rank()).collect())
        .into_iter()
        .map(|w| sys.normal_form(&w).unwrap())
        .collect()
}

/// The unique element of maximal length.
pub fn longest_by_length(sys: &CoxeterSystem) -> Element {
    let all = sys.enumerate(None).unwrap();
    let top = all.iter().map(|&x| sys.length(x)).max().unwrap();
    let tops: Vec<Element> = all.into_iter().filter(|&x| sys.length(x) == top).collect();
    assert_eq!(tops.len(), 1);
    tops[0]
}

pub fn has_full_support(sys: &CoxeterSystem, x: Element) -> bool {
    let letters: BTreeSet<usize> = sys.word(x).into_iter().collect();
    letters.len() == sys.rank()
}
