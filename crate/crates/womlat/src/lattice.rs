//! Finite lattices with an explicit order relation and precomputed
//! join/meet tables.
//!
//! A lattice is built from its cover relation (`from_covers`); construction
//! eagerly validates that the reflexive-transitive closure is a partial
//! order in which every pair of elements has a unique least upper bound and
//! a unique greatest lower bound. Downstream code may therefore assume the
//! lattice laws without re-checking them.
//!
//! Elements are identified by dense `usize` ids in input order; labels are
//! kept for reporting. Values are immutable after construction.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

/// Size cap for isomorphism-sensitive operations (`canonical_form` and
/// lattice enumeration). Canonical forms minimize over all `n!` relabelings,
/// which is acceptable up to this bound.
pub const ENUM_CAP: usize = 7;

/// Which bound was missing or ambiguous in a failed lattice check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Join,
    Meet,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Join => write!(f, "least upper bound"),
            BoundKind::Meet => write!(f, "greatest lower bound"),
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    EmptyCarrier,
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("order is not antisymmetric: `{0}` and `{1}` lie on a cycle")]
    NotAntisymmetric(String, String),
    #[error("not a lattice: `{a}` and `{b}` have no unique {kind}")]
    NotALattice { a: String, b: String, kind: BoundKind },
    #[error("{n} elements exceed the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

/// Isomorphism-invariant key for a lattice: the lexicographically smallest
/// packed order matrix over all element permutations. Two lattices get the
/// same key iff they are order-isomorphic. Only defined for `n <= ENUM_CAP`,
/// so the matrix fits in a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    n: u8,
    bits: u64,
}

/// A finite lattice: labeled carrier, order relation, join/meet tables and
/// (always present after validation) bottom and top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    names: Vec<String>,
    leq: Vec<bool>,
    join_table: Vec<usize>,
    meet_table: Vec<usize>,
    bottom: Option<usize>,
    top: Option<usize>,
}

impl FiniteLattice {
    /// Builds a lattice from element labels and a cover relation
    /// `(lower, upper)`. The order is the reflexive-transitive closure of
    /// the covers.
    pub fn from_covers<S: AsRef<str>, T: AsRef<str>>(
        names: &[S],
        covers: &[(T, T)],
    ) -> Result<Self, LatticeError> {
        if names.is_empty() {
            return Err(LatticeError::EmptyCarrier);
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(LatticeError::DuplicateLabel(name.clone()));
            }
        }
        let index_of = |label: &str| -> Result<usize, LatticeError> {
            names
                .iter()
                .position(|n| n == label)
                .ok_or_else(|| LatticeError::UnknownLabel(label.to_string()))
        };

        let n = names.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (lo, hi) in covers {
            let lo = index_of(lo.as_ref())?;
            let hi = index_of(hi.as_ref())?;
            leq[lo * n + hi] = true;
        }
        // Reflexive-transitive closure (Floyd-Warshall on booleans).
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Self::from_leq(names, leq)
    }

    /// Builds a lattice from a reflexive-transitive boolean relation,
    /// checking antisymmetry and unique bounds.
    pub(crate) fn from_leq(names: Vec<String>, leq: Vec<bool>) -> Result<Self, LatticeError> {
        let n = names.len();
        debug_assert_eq!(leq.len(), n * n);
        for a in 0..n {
            for b in (a + 1)..n {
                if leq[a * n + b] && leq[b * n + a] {
                    return Err(LatticeError::NotAntisymmetric(
                        names[a].clone(),
                        names[b].clone(),
                    ));
                }
            }
        }

        let unique_bound = |a: usize, b: usize, kind: BoundKind| -> Result<usize, LatticeError> {
            // Candidates: common upper (resp. lower) bounds of {a, b}.
            let bounds: Vec<usize> = (0..n)
                .filter(|&c| match kind {
                    BoundKind::Join => leq[a * n + c] && leq[b * n + c],
                    BoundKind::Meet => leq[c * n + a] && leq[c * n + b],
                })
                .collect();
            // The bound is the one candidate below (resp. above) all others.
            let best: Vec<usize> = bounds
                .iter()
                .copied()
                .filter(|&c| {
                    bounds.iter().all(|&d| match kind {
                        BoundKind::Join => leq[c * n + d],
                        BoundKind::Meet => leq[d * n + c],
                    })
                })
                .collect();
            match best.as_slice() {
                [x] => Ok(*x),
                _ => Err(LatticeError::NotALattice {
                    a: names[a].clone(),
                    b: names[b].clone(),
                    kind,
                }),
            }
        };

        let mut join_table = vec![0usize; n * n];
        let mut meet_table = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                join_table[a * n + b] = unique_bound(a, b, BoundKind::Join)?;
                meet_table[a * n + b] = unique_bound(a, b, BoundKind::Meet)?;
            }
        }
        let bottom = (0..n).find(|&c| (0..n).all(|d| leq[c * n + d]));
        let top = (0..n).find(|&c| (0..n).all(|d| leq[d * n + c]));
        Ok(FiniteLattice {
            names,
            leq,
            join_table,
            meet_table,
            bottom,
            top,
        })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Looks an element up by label.
    pub fn element(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|n| n == label)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join_table[a * self.size() + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet_table[a * self.size() + b]
    }

    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    /// The up-set `[x) = {y | x <= y}`, ascending by id.
    pub fn principal_filter(&self, x: usize) -> Vec<usize> {
        self.elements().filter(|&y| self.leq(x, y)).collect()
    }

    /// The down-set `(x] = {y | y <= x}`, ascending by id.
    pub fn principal_ideal(&self, x: usize) -> Vec<usize> {
        self.elements().filter(|&y| self.leq(y, x)).collect()
    }

    /// Cover pairs `(lower, upper)` of the Hasse diagram, ascending.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                if a != b && self.leq(a, b) {
                    let direct = !self
                        .elements()
                        .any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                    if direct {
                        out.push((a, b));
                    }
                }
            }
        }
        out
    }

    /// The sublattice on the principal filter `[x)` with inherited order.
    /// Returns the sublattice and the map from its ids back to parent ids.
    /// Principal filters are closed under join and meet, so this never
    /// fails.
    pub fn interval_sublattice(&self, x: usize) -> (FiniteLattice, Vec<usize>) {
        let members = self.principal_filter(x);
        let m = members.len();
        let names: Vec<String> = members.iter().map(|&id| self.names[id].clone()).collect();
        let mut leq = vec![false; m * m];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                leq[i * m + j] = self.leq(a, b);
            }
        }
        let sub = Self::from_leq(names, leq).expect("principal filter is always a sublattice");
        (sub, members)
    }

    /// Isomorphism-invariant key: the minimal packed order matrix over all
    /// element permutations. Errors with `CapExceeded` above `ENUM_CAP`.
    pub fn canonical_form(&self) -> Result<CanonicalKey, LatticeError> {
        let n = self.size();
        if n > ENUM_CAP {
            return Err(LatticeError::CapExceeded { n, cap: ENUM_CAP });
        }
        let mut best = u64::MAX;
        for perm in (0..n).permutations(n) {
            let mut bits = 0u64;
            for i in 0..n {
                for j in 0..n {
                    if self.leq(perm[i], perm[j]) {
                        bits |= 1 << (i * n + j);
                    }
                }
            }
            best = best.min(bits);
        }
        Ok(CanonicalKey {
            n: n as u8,
            bits: best,
        })
    }

    /// Renders an assignment of elements to variables using labels.
    pub fn label_assignment(&self, vars: &[&str], vals: &[usize]) -> Vec<(String, String)> {
        vars.iter()
            .zip(vals)
            .map(|(v, &e)| (v.to_string(), self.names[e].clone()))
            .collect()
    }
}
