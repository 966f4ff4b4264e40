//! The sets `E(w) = { z : N(w, z, z) != 0 }`, the invariant
//! `d(w) = max deg N(w, z, z)` over `E(w)`, and `E'(w)`, the members attaining it.
//!
//! Membership is decided by computing `T_w T_z` for every candidate `z`. For
//! the infinite dihedral group candidates stop at a length bound, which is
//! recorded in every report.

use serde::Serialize;

use crate::coxeter::{CoxeterSystem, Element};
use crate::error::{Error, Result};
use crate::hecke::HeckeAlgebra;
use crate::poly::IntPoly;

/// Length bound used for infinite groups when the caller gives none.
pub const DEFAULT_TRUNCATION: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub z: Element,
    pub n: IntPoly,
    pub deg: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ESetReport {
    pub w: Element,
    /// Sorted by (length, word).
    pub members: Vec<Member>,
    pub d: Option<usize>,
    pub e_prime: Vec<Element>,
    /// Candidate length bound; `Some` exactly when the group is infinite.
    pub truncation: Option<usize>,
}

impl ESetReport {
    pub fn member_elements(&self) -> Vec<Element> {
        self.members.iter().map(|m| m.z).collect()
    }

    pub fn is_truncated(&self) -> bool {
        self.truncation.is_some()
    }

    pub fn to_json(&self, sys: &CoxeterSystem) -> ESetJson {
        ESetJson {
            w: sys.word(self.w),
            truncation: self.truncation,
            members: self
                .members
                .iter()
                .map(|m| MemberJson {
                    z: sys.word(m.z),
                    n: m.n.clone(),
                    deg: m.deg,
                })
                .collect(),
            d: self.d,
            e_prime: self.e_prime.iter().map(|&z| sys.word(z)).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MemberJson {
    pub z: Vec<usize>,
    #[serde(rename = "N")]
    pub n: IntPoly,
    pub deg: usize,
}

/// Serialized form of an [`ESetReport`].
#[derive(Debug, Clone, Serialize)]
pub struct ESetJson {
    pub w: Vec<usize>,
    pub truncation: Option<usize>,
    pub members: Vec<MemberJson>,
    pub d: Option<usize>,
    pub e_prime: Vec<Vec<usize>>,
}

/// Answer to "is `E(w)` nonempty?".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BulletMembership {
    Member,
    NotMember,
    /// No witness up to the truncation bound; emptiness is not certified.
    Unknown,
}

/// `d(w)` and `E'(w)`; `lower_bound` marks results from a truncated search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub d: usize,
    pub e_prime: Vec<Element>,
    pub lower_bound: bool,
}

fn candidates(sys: &CoxeterSystem, bound: Option<usize>) -> Result<(Vec<Element>, Option<usize>)> {
    if sys.is_finite() {
        Ok((sys.enumerate(None)?, None))
    } else {
        let bound = bound.ok_or_else(|| Error::MissingBound(sys.coxeter_type().to_string()))?;
        Ok((sys.enumerate(Some(bound))?, Some(bound)))
    }
}

/// Computes `E(w)` with `d(w)` and `E'(w)`.
///
/// `bound` is required for infinite groups and ignored for finite ones, whose
/// reports are always complete.
pub fn e_set(sys: &CoxeterSystem, w: Element, bound: Option<usize>) -> Result<ESetReport> {
    let (cands, truncation) = candidates(sys, bound)?;
    let hecke = HeckeAlgebra::new(sys);
    let members: Vec<Member> = cands
        .iter()
        .zip(hecke.diagonal_constants(w, &cands))
        .filter_map(|(&z, n)| {
            let deg = n.degree().finite()?;
            Some(Member { z, n, deg })
        })
        .collect();
    let d = members.iter().map(|m| m.deg).max();
    let e_prime = members
        .iter()
        .filter(|m| Some(m.deg) == d)
        .map(|m| m.z)
        .collect();
    Ok(ESetReport {
        w,
        members,
        d,
        e_prime,
        truncation,
    })
}

pub fn in_w_bullet(
    sys: &CoxeterSystem,
    w: Element,
    bound: Option<usize>,
) -> Result<BulletMembership> {
    let report = e_set(sys, w, bound)?;
    Ok(match (report.members.is_empty(), report.is_truncated()) {
        (false, _) => BulletMembership::Member,
        (true, false) => BulletMembership::NotMember,
        (true, true) => BulletMembership::Unknown,
    })
}

pub fn d_and_e_prime(
    sys: &CoxeterSystem,
    w: Element,
    bound: Option<usize>,
) -> Result<DegreeReport> {
    let report = e_set(sys, w, bound)?;
    let d = report.d.ok_or(if report.is_truncated() {
        Error::EmptyESet(" up to the truncation bound")
    } else {
        Error::EmptyESet("")
    })?;
    Ok(DegreeReport {
        d,
        lower_bound: report.is_truncated(),
        e_prime: report.e_prime,
    })
}
