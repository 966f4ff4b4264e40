//! Integer root systems for the crystallographic types. The Weyl group acts
//! on root coordinates in the simple-root basis; each simple reflection is
//! stored as a permutation of the (finite) root set.

use std::collections::HashMap;

use super::matrix::CoxeterType;

#[cfg_attr(not(test), allow(dead_code))]
pub(crate) struct RootSystem {
    rank: usize,
    /// All roots, simple-root coordinates. The first `rank` entries are the simple roots.
    roots: Vec<Vec<i32>>,
    /// `reflections[s][r]` is the index of `s(roots[r])`.
    reflections: Vec<Vec<u16>>,
}

/// Generalized Cartan matrix `a[i][j]` with `s_i(α_j) = α_j - a[i][j] α_i`.
#[allow(clippy::needless_range_loop)]
fn cartan(ty: CoxeterType) -> Vec<Vec<i32>> {
    let rank = ty.rank();
    let cm = ty.matrix();
    let mut a = vec![vec![0i32; rank]; rank];
    for i in 0..rank {
        a[i][i] = 2;
        for j in (i + 1)..rank {
            // (a_ij, a_ji) with a_ij * a_ji = 4 cos^2(pi / m).
            let (aij, aji) = match cm.get(i + 1, j + 1) {
                Some(2) => (0, 0),
                Some(3) => (-1, -1),
                Some(4) => match ty {
                    // Short simple root at the high end for B_n, long for C_n.
                    CoxeterType::C(_) => (-2, -1),
                    _ => (-1, -2),
                },
                Some(6) => (-1, -3),
                other => unreachable!("bond {other:?} is not crystallographic"),
            };
            a[i][j] = aij;
            a[j][i] = aji;
        }
    }
    a
}

#[cfg_attr(not(test), allow(dead_code))]
impl RootSystem {
    pub(crate) fn new(ty: CoxeterType) -> Self {
        let rank = ty.rank();
        let a = cartan(ty);
        let reflect = |s: usize, v: &[i32]| -> Vec<i32> {
            let mut out = v.to_vec();
            out[s] -= (0..rank).map(|j| a[s][j] * v[j]).sum::<i32>();
            out
        };

        let mut roots: Vec<Vec<i32>> = (0..rank)
            .map(|i| (0..rank).map(|j| i32::from(i == j)).collect())
            .collect();
        let mut index: HashMap<Vec<i32>, usize> = roots
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, r)| (r, i))
            .collect();
        let mut frontier = 0;
        while frontier < roots.len() {
            let r = roots[frontier].clone();
            for s in 0..rank {
                let img = reflect(s, &r);
                if !index.contains_key(&img) {
                    index.insert(img.clone(), roots.len());
                    roots.push(img);
                }
            }
            frontier += 1;
        }

        let reflections = (0..rank)
            .map(|s| roots.iter().map(|r| index[&reflect(s, r)] as u16).collect())
            .collect();
        Self {
            rank,
            roots,
            reflections,
        }
    }

    pub(crate) fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub(crate) fn is_positive(&self, r: usize) -> bool {
        self.roots[r].iter().all(|&c| c >= 0)
    }

    pub(crate) fn identity(&self) -> Vec<u16> {
        (0..self.roots.len() as u16).collect()
    }

    /// `w ↦ w s`, with elements stored as root permutations.
    pub(crate) fn right_mul(&self, w: &[u16], s: usize) -> Vec<u16> {
        self.reflections[s].iter().map(|&r| w[r as usize]).collect()
    }

    /// Number of positive roots sent to negative roots.
    pub(crate) fn length(&self, w: &[u16]) -> usize {
        (0..self.roots.len())
            .filter(|&r| self.is_positive(r) && !self.is_positive(w[r] as usize))
            .count()
    }

    pub(crate) fn rank(&self) -> usize {
        self.rank
    }
}
