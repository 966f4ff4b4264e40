//! Closed-form arithmetic in `I2(m)`, `m` finite or infinite. Every element is
//! an alternating word `s_a s_b s_a ...` of length at most `m`.

/// Alternating word of length `len` starting with generator `start` (1 or 2).
/// The identity is stored with `start = 1`, and so is the longest element of
/// a finite dihedral group (its ShortLex-least word starts with `s1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Alt {
    pub(crate) len: u32,
    pub(crate) start: u8,
}

fn other(s: u8) -> u8 {
    3 - s
}

impl Alt {
    pub(crate) const IDENTITY: Alt = Alt { len: 0, start: 1 };

    pub(crate) fn last(self) -> u8 {
        if self.len % 2 == 1 {
            self.start
        } else {
            other(self.start)
        }
    }

    pub(crate) fn word(self) -> Vec<usize> {
        (0..self.len)
            .map(|i| {
                usize::from(if i % 2 == 0 {
                    self.start
                } else {
                    other(self.start)
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Dihedral {
    /// `None` is the infinite dihedral group.
    pub(crate) m: Option<u32>,
}

impl Dihedral {
    fn canonical(self, a: Alt) -> Alt {
        if a.len == 0 || Some(a.len) == self.m {
            Alt {
                len: a.len,
                start: 1,
            }
        } else {
            a
        }
    }

    /// `a · s`.
    pub(crate) fn right_mul(self, a: Alt, s: u8) -> Alt {
        if a.len == 0 {
            return self.canonical(Alt { len: 1, start: s });
        }
        if Some(a.len) == self.m {
            // The longest element has a reduced word ending in s; drop that letter.
            let m = a.len;
            let start = if m % 2 == 1 { s } else { other(s) };
            return self.canonical(Alt { len: m - 1, start });
        }
        if a.last() == s {
            self.canonical(Alt {
                len: a.len - 1,
                start: a.start,
            })
        } else {
            self.canonical(Alt {
                len: a.len + 1,
                start: a.start,
            })
        }
    }

    /// `s · a`.
    pub(crate) fn left_mul(self, s: u8, a: Alt) -> Alt {
        if a.len == 0 {
            return self.canonical(Alt { len: 1, start: s });
        }
        if Some(a.len) == self.m {
            // Reduced word starting in s; drop that letter.
            return self.canonical(Alt {
                len: a.len - 1,
                start: other(s),
            });
        }
        if a.start == s {
            self.canonical(Alt {
                len: a.len - 1,
                start: other(s),
            })
        } else {
            self.canonical(Alt {
                len: a.len + 1,
                start: s,
            })
        }
    }

    pub(crate) fn inverse(self, a: Alt) -> Alt {
        self.canonical(Alt {
            len: a.len,
            start: a.last(),
        })
    }
}
