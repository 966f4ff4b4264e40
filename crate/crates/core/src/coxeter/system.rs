use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::hash::Hash;

use itertools::Itertools;

use super::dihedral::{Alt, Dihedral};
use super::matrix::{CoxeterMatrix, CoxeterType};
use super::roots::RootSystem;
use crate::error::{Error, Result};

/// Largest group this crate will enumerate eagerly.
pub const MAX_ENUMERATED: usize = 1_000_000;

/// A group element.
///
/// Elements of finite systems carry their dense enumeration index; elements of
/// the infinite dihedral group are keyed by their alternating canonical word.
/// Either way the ShortLex-least reduced word is available from
/// [`CoxeterSystem::word`]. The derived order is (length, lexicographic word)
/// for elements of the same system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(Repr);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    Indexed(u32),
    Alternating(Alt),
}

impl Element {
    /// Dense index in the enumeration, `None` for infinite systems.
    pub fn index(self) -> Option<usize> {
        match self.0 {
            Repr::Indexed(i) => Some(i as usize),
            Repr::Alternating(_) => None,
        }
    }
}

/// Dense multiplication tables for a finite group, rows in enumeration order.
#[derive(Debug)]
struct Tables {
    words: Vec<Vec<usize>>,
    lengths: Vec<u32>,
    /// `right[x * rank + s]` is the index of `x s`.
    right: Vec<u32>,
    left: Vec<u32>,
    inverse: Vec<u32>,
}

impl Tables {
    /// Breadth-first closure from the identity by right multiplication with
    /// generators. Parents are processed in ShortLex order and generators in
    /// increasing order, so the first word reaching an element is its
    /// ShortLex-least reduced word.
    fn build<K: Hash + Eq + Clone>(
        rank: usize,
        identity: K,
        right_mul: impl Fn(&K, usize) -> K,
        limit: usize,
    ) -> Result<Self> {
        let mut keys = vec![identity.clone()];
        let mut index: HashMap<K, u32> = HashMap::from([(identity, 0)]);
        let mut words = vec![Vec::new()];
        let mut lengths = vec![0u32];
        let mut right = Vec::new();
        let mut x = 0;
        while x < keys.len() {
            for s in 0..rank {
                let y = right_mul(&keys[x], s);
                let next = keys.len() as u32;
                let idx = *index.entry(y.clone()).or_insert(next);
                if idx == next {
                    if keys.len() >= limit {
                        return Err(Error::Internal(format!(
                            "enumeration exceeded {limit} elements"
                        )));
                    }
                    keys.push(y);
                    let mut w = words[x].clone();
                    w.push(s + 1);
                    words.push(w);
                    lengths.push(lengths[x] + 1);
                }
                right.push(idx);
            }
            x += 1;
        }

        let n = keys.len();
        let inverse: Vec<u32> = words
            .iter()
            .map(|w| {
                w.iter()
                    .rev()
                    .fold(0u32, |acc, &s| right[acc as usize * rank + s - 1])
            })
            .collect();
        let mut left = vec![0u32; n * rank];
        for x in 0..n {
            for s in 0..rank {
                let xi = inverse[x] as usize;
                left[x * rank + s] = inverse[right[xi * rank + s] as usize];
            }
        }
        Ok(Self {
            words,
            lengths,
            right,
            left,
            inverse,
        })
    }

    fn len(&self) -> usize {
        self.words.len()
    }
}

#[derive(Debug)]
enum Backend {
    Finite(Tables),
    InfiniteDihedral,
}

/// The conjugacy class of an element together with the least length in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub elements: Vec<Element>,
    pub min_length: usize,
}

/// A Coxeter system with exact element arithmetic.
///
/// Finite systems are enumerated at construction; afterwards every query is a
/// table lookup and the value is immutable.
#[derive(Debug)]
pub struct CoxeterSystem {
    ty: CoxeterType,
    matrix: CoxeterMatrix,
    backend: Backend,
}

impl CoxeterSystem {
    /// Builds a system from a type spec such as `"A3"`, `"F4"`, `"I2(5)"` or `"I2(inf)"`.
    pub fn build(spec: &str) -> Result<Self> {
        Self::from_type(spec.parse()?)
    }

    pub fn from_type(ty: CoxeterType) -> Result<Self> {
        let matrix = ty.matrix();
        let rank = ty.rank();
        let backend = match ty {
            CoxeterType::I2(None) => Backend::InfiniteDihedral,
            CoxeterType::I2(Some(m)) => {
                let d = Dihedral { m: Some(m) };
                Backend::Finite(Tables::build(
                    rank,
                    Alt::IDENTITY,
                    |a, s| d.right_mul(*a, s as u8 + 1),
                    MAX_ENUMERATED,
                )?)
            }
            _ => {
                let order = ty.order().expect("crystallographic types are finite");
                if order > MAX_ENUMERATED as u128 {
                    return Err(Error::TooLarge {
                        name: ty.to_string(),
                        order,
                        limit: MAX_ENUMERATED,
                    });
                }
                let rs = RootSystem::new(ty);
                Backend::Finite(Tables::build(
                    rank,
                    rs.identity(),
                    |w, s| rs.right_mul(w, s),
                    MAX_ENUMERATED,
                )?)
            }
        };
        let sys = Self {
            ty,
            matrix,
            backend,
        };
        if let (Some(order), Backend::Finite(t)) = (ty.order(), &sys.backend) {
            if t.len() as u128 != order {
                return Err(Error::Internal(format!(
                    "{ty} enumerated {} elements, expected {order}",
                    t.len()
                )));
            }
        }
        Ok(sys)
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        self.ty
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.backend, Backend::Finite(_))
    }

    /// Number of elements, `None` when infinite.
    pub fn order(&self) -> Option<usize> {
        self.tables().map(Tables::len)
    }

    fn tables(&self) -> Option<&Tables> {
        match &self.backend {
            Backend::Finite(t) => Some(t),
            Backend::InfiniteDihedral => None,
        }
    }

    fn finite(&self, what: &'static str) -> Result<&Tables> {
        self.tables().ok_or(Error::InfiniteGroup(what))
    }

    const INF: Dihedral = Dihedral { m: None };

    fn alt(e: Element) -> Alt {
        match e.0 {
            Repr::Alternating(a) => a,
            Repr::Indexed(_) => panic!("indexed element used with an infinite system"),
        }
    }

    fn idx(e: Element) -> usize {
        match e.0 {
            Repr::Indexed(i) => i as usize,
            Repr::Alternating(_) => panic!("alternating element used with a finite system"),
        }
    }

    pub fn identity(&self) -> Element {
        match self.backend {
            Backend::Finite(_) => Element(Repr::Indexed(0)),
            Backend::InfiniteDihedral => Element(Repr::Alternating(Alt::IDENTITY)),
        }
    }

    fn check_gen(&self, s: usize) -> Result<()> {
        if s == 0 || s > self.rank() {
            Err(Error::GeneratorOutOfRange {
                index: s,
                rank: self.rank(),
            })
        } else {
            Ok(())
        }
    }

    /// The simple reflection `s` (1-based).
    pub fn generator(&self, s: usize) -> Result<Element> {
        self.check_gen(s)?;
        Ok(self.mul_gen(self.identity(), s))
    }

    /// Element at a dense enumeration index.
    pub fn element(&self, index: usize) -> Option<Element> {
        let t = self.tables()?;
        (index < t.len()).then_some(Element(Repr::Indexed(index as u32)))
    }

    /// `x s` for a 1-based generator `s`. Panics if `s` is out of range.
    pub fn mul_gen(&self, x: Element, s: usize) -> Element {
        assert!(s >= 1 && s <= self.rank(), "generator {s} out of range");
        match &self.backend {
            Backend::Finite(t) => {
                Element(Repr::Indexed(t.right[Self::idx(x) * self.rank() + s - 1]))
            }
            Backend::InfiniteDihedral => Element(Repr::Alternating(
                Self::INF.right_mul(Self::alt(x), s as u8),
            )),
        }
    }

    /// `s x` for a 1-based generator `s`. Panics if `s` is out of range.
    pub fn gen_mul(&self, s: usize, x: Element) -> Element {
        assert!(s >= 1 && s <= self.rank(), "generator {s} out of range");
        match &self.backend {
            Backend::Finite(t) => {
                Element(Repr::Indexed(t.left[Self::idx(x) * self.rank() + s - 1]))
            }
            Backend::InfiniteDihedral => {
                Element(Repr::Alternating(Self::INF.left_mul(s as u8, Self::alt(x))))
            }
        }
    }

    /// The element represented by a word of 1-based generator indices.
    pub fn normal_form(&self, word: &[usize]) -> Result<Element> {
        for &s in word {
            self.check_gen(s)?;
        }
        Ok(word
            .iter()
            .fold(self.identity(), |acc, &s| self.mul_gen(acc, s)))
    }

    /// ShortLex-least reduced word.
    pub fn word(&self, x: Element) -> Vec<usize> {
        match &self.backend {
            Backend::Finite(t) => t.words[Self::idx(x)].clone(),
            Backend::InfiniteDihedral => Self::alt(x).word(),
        }
    }

    pub fn length(&self, x: Element) -> usize {
        match &self.backend {
            Backend::Finite(t) => t.lengths[Self::idx(x)] as usize,
            Backend::InfiniteDihedral => Self::alt(x).len as usize,
        }
    }

    pub fn multiply(&self, a: Element, b: Element) -> Element {
        self.word(b)
            .into_iter()
            .fold(a, |acc, s| self.mul_gen(acc, s))
    }

    pub fn inverse(&self, x: Element) -> Element {
        match &self.backend {
            Backend::Finite(t) => Element(Repr::Indexed(t.inverse[Self::idx(x)])),
            Backend::InfiniteDihedral => {
                Element(Repr::Alternating(Self::INF.inverse(Self::alt(x))))
            }
        }
    }

    /// `l(x s) < l(x)`.
    pub fn is_right_descent(&self, x: Element, s: usize) -> bool {
        self.length(self.mul_gen(x, s)) < self.length(x)
    }

    pub fn longest_element(&self) -> Result<Element> {
        let t = self
            .tables()
            .ok_or(Error::InfiniteGroup("the longest element"))?;
        // Enumeration is sorted by length, and the longest element is unique.
        Ok(Element(Repr::Indexed(t.len() as u32 - 1)))
    }

    /// All elements in (length, lexicographic word) order, optionally only
    /// those of length at most `max_len`. Infinite systems require the bound.
    pub fn enumerate(&self, max_len: Option<usize>) -> Result<Vec<Element>> {
        match (&self.backend, max_len) {
            (Backend::Finite(t), bound) => Ok((0..t.len())
                .filter(|&i| bound.is_none_or(|b| t.lengths[i] as usize <= b))
                .map(|i| Element(Repr::Indexed(i as u32)))
                .collect()),
            (Backend::InfiniteDihedral, Some(bound)) => {
                let mut out = vec![self.identity()];
                for len in 1..=bound as u32 {
                    for start in [1, 2] {
                        out.push(Element(Repr::Alternating(Alt { len, start })));
                    }
                }
                Ok(out)
            }
            (Backend::InfiniteDihedral, None) => Err(Error::MissingBound(self.ty.to_string())),
        }
    }

    /// Bruhat order, via the lifting property: if `b s < b` then
    /// `a ≤ b` iff `min(a, a s) ≤ b s`.
    pub fn bruhat_leq(&self, a: Element, b: Element) -> bool {
        let (mut a, mut b) = (a, b);
        loop {
            let (la, lb) = (self.length(a), self.length(b));
            if la > lb {
                return false;
            }
            if lb == 0 {
                return la == 0;
            }
            if la == lb {
                return a == b;
            }
            let s = *self.word(b).last().expect("nonempty word");
            b = self.mul_gen(b, s);
            let as_ = self.mul_gen(a, s);
            if self.length(as_) < la {
                a = as_;
            }
        }
    }

    pub fn conjugacy_class(&self, x: Element) -> Result<ConjugacyClass> {
        self.finite("conjugacy classes")?;
        let mut seen = HashSet::from([x]);
        let mut queue = VecDeque::from([x]);
        while let Some(y) = queue.pop_front() {
            for s in 1..=self.rank() {
                let c = self.gen_mul(s, self.mul_gen(y, s));
                if seen.insert(c) {
                    queue.push_back(c);
                }
            }
        }
        let elements: Vec<Element> = seen.into_iter().sorted().collect();
        let min_length = elements
            .iter()
            .map(|&e| self.length(e))
            .min()
            .expect("class contains x");
        Ok(ConjugacyClass {
            elements,
            min_length,
        })
    }

    /// Products of all generators, each used once, over every ordering.
    pub fn coxeter_elements(&self) -> Result<Vec<Element>> {
        self.finite("Coxeter elements")?;
        let set: BTreeSet<Element> = (1..=self.rank())
            .permutations(self.rank())
            .map(|p| self.normal_form(&p).expect("valid generators"))
            .collect();
        Ok(set.into_iter().collect())
    }

    /// Whether every generator occurs in a (equivalently, every) reduced word.
    pub fn is_full_support(&self, x: Element) -> bool {
        let word = self.word(x);
        (1..=self.rank()).all(|s| word.contains(&s))
    }

    /// Parses a comma-separated word such as `"1,2,1"`; the empty string is the identity.
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        let text = text
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .trim();
        if text.is_empty() {
            return Ok(Vec::new());
        }
        text.split(',')
            .map(|t| {
                let s: usize = t
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidWord(text.to_string()))?;
                self.check_gen(s)?;
                Ok(s)
            })
            .collect()
    }
}
