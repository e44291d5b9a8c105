//! Exhaustive enumeration: all unary tables on a lattice filtered by
//! property constraints, all lattices of a given size up to isomorphism,
//! and first-match search across both.
//!
//! Output order is deterministic everywhere: tables come out in
//! lexicographic order, lattices sorted by canonical key. The work cap
//! counts candidate tables; exceeding it is an error, never silent
//! truncation.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{all_unary_tables, UnaryAlgebra};
use crate::lattice::{FiniteLattice, ENUM_CAP};

/// Default cap on the number of candidate unary tables per lattice.
pub const WORK_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("search space of {candidates} candidate tables exceeds the work cap {cap}")]
    WorkCapExceeded { candidates: u64, cap: u64 },
    #[error("{n} elements exceed the enumeration cap of {cap}")]
    SizeCapExceeded { n: usize, cap: usize },
    #[error("unknown property `{0}` in constraint list")]
    UnknownProperty(String),
}

/// Required outcomes per property; `None` leaves a property unconstrained.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PropertyConstraints {
    pub wom: Option<bool>,
    pub dwom: Option<bool>,
    pub dnl: Option<bool>,
    pub wdnl: Option<bool>,
    pub complementation: Option<bool>,
    pub orthocomplementation: Option<bool>,
    pub antitone: Option<bool>,
    pub involution: Option<bool>,
}

impl PropertyConstraints {
    /// Parses a comma-separated list like `wom,+dwom,-dnl`: a bare name or
    /// `+name` requires the property, `-name` forbids it.
    pub fn parse(spec: &str) -> Result<Self, SearchError> {
        let mut c = PropertyConstraints::default();
        for raw in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, wanted) = match raw.strip_prefix('-') {
                Some(rest) => (rest, false),
                None => (raw.strip_prefix('+').unwrap_or(raw), true),
            };
            let slot = match name {
                "wom" => &mut c.wom,
                "dwom" => &mut c.dwom,
                "dnl" => &mut c.dnl,
                "wdnl" => &mut c.wdnl,
                "comp" | "complementation" => &mut c.complementation,
                "ortho" | "orthocomplementation" => &mut c.orthocomplementation,
                "antitone" => &mut c.antitone,
                "involution" => &mut c.involution,
                other => return Err(SearchError::UnknownProperty(other.to_string())),
            };
            *slot = Some(wanted);
        }
        Ok(c)
    }

    /// Evaluates the constrained properties only, cheapest first.
    pub fn matches(&self, a: &UnaryAlgebra) -> bool {
        let ok = |required: Option<bool>, actual: &dyn Fn() -> bool| match required {
            None => true,
            Some(want) => actual() == want,
        };
        // Finite lattices are bounded, so the bounded-only predicates
        // cannot error.
        ok(self.complementation, &|| {
            a.is_complementation().map(|r| r.holds).unwrap_or(false)
        }) && ok(self.dnl, &|| a.satisfies_double_negation().holds)
            && ok(self.involution, &|| a.is_involution().holds)
            && ok(self.wdnl, &|| a.satisfies_weak_double_negation().holds)
            && ok(self.antitone, &|| a.is_antitone().holds)
            && ok(self.wom, &|| a.is_weakly_orthomodular().holds)
            && ok(self.dwom, &|| a.is_dually_weakly_orthomodular().holds)
            && ok(self.orthocomplementation, &|| {
                a.is_orthocomplementation().map(|r| r.holds).unwrap_or(false)
            })
    }
}

impl fmt::Display for PropertyConstraints {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [
            ("wom", self.wom),
            ("dwom", self.dwom),
            ("dnl", self.dnl),
            ("wdnl", self.wdnl),
            ("comp", self.complementation),
            ("ortho", self.orthocomplementation),
            ("antitone", self.antitone),
            ("involution", self.involution),
        ]
        .iter()
        .filter_map(|(name, v)| v.map(|w| format!("{}{name}", if w { "+" } else { "-" })))
        .collect();
        if parts.is_empty() {
            write!(f, "(unconstrained)")
        } else {
            write!(f, "{}", parts.join(","))
        }
    }
}

/// All unary tables on `l` meeting the constraints, in lexicographic table
/// order.
pub fn enumerate_unary(
    l: &Arc<FiniteLattice>,
    want: &PropertyConstraints,
) -> Result<Vec<UnaryAlgebra>, SearchError> {
    enumerate_unary_capped(l, want, WORK_CAP)
}

pub fn enumerate_unary_capped(
    l: &Arc<FiniteLattice>,
    want: &PropertyConstraints,
    cap: u64,
) -> Result<Vec<UnaryAlgebra>, SearchError> {
    let n = l.size();
    let candidates = (n as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if candidates > cap {
        return Err(SearchError::WorkCapExceeded { candidates, cap });
    }
    let mut out = Vec::new();
    for table in all_unary_tables(n) {
        let a = UnaryAlgebra::new(l.clone(), table).expect("odometer yields valid tables");
        if want.matches(&a) {
            out.push(a);
        }
    }
    Ok(out)
}

/// All pairwise non-isomorphic lattices with exactly `n` elements, sorted
/// by canonical key.
///
/// Generation walks naturally labeled posets: element `i` picks a
/// non-empty, down-closed subset of `{0..i-1}` as its strict down-set
/// (non-empty because a lattice has a unique minimal element). The lattice
/// filter and canonical-form dedup run at the leaves.
pub fn enumerate_lattices(n: usize) -> Result<Vec<FiniteLattice>, SearchError> {
    if n > ENUM_CAP {
        return Err(SearchError::SizeCapExceeded { n, cap: ENUM_CAP });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let mut found = BTreeMap::new();
    let mut leq = vec![false; n * n];
    for i in 0..n {
        leq[i * n + i] = true;
    }
    extend(&mut leq, n, 1, &names, &mut found);
    Ok(found.into_values().collect())
}

fn extend(
    leq: &mut Vec<bool>,
    n: usize,
    i: usize,
    names: &[String],
    found: &mut BTreeMap<crate::lattice::CanonicalKey, FiniteLattice>,
) {
    if i == n {
        // unique maximal element required; then the full lattice check
        let maximal = (0..n).filter(|&a| (0..n).all(|b| a == b || !leq[a * n + b]));
        if maximal.count() != 1 {
            return;
        }
        if let Ok(l) = FiniteLattice::from_leq(names.to_vec(), leq.clone()) {
            let key = l.canonical_form().expect("size under cap");
            found.entry(key).or_insert(l);
        }
        return;
    }
    // Down-sets of the poset built so far, as bitmasks over {0..i-1}.
    for mask in 1u32..(1 << i) {
        let mut closed = true;
        'check: for j in 0..i {
            if mask & (1 << j) != 0 {
                for k in 0..i {
                    if leq[k * n + j] && mask & (1 << k) == 0 {
                        closed = false;
                        break 'check;
                    }
                }
            }
        }
        if !closed {
            continue;
        }
        for j in 0..i {
            if mask & (1 << j) != 0 {
                leq[j * n + i] = true;
            }
        }
        extend(leq, n, i + 1, names, found);
        for j in 0..i {
            leq[j * n + i] = false;
        }
    }
}

/// First algebra (by lattice size, then canonical key, then table order)
/// meeting the constraints among all lattices with at most `max_n`
/// elements, or `None` when the whole range is exhausted.
pub fn find_example(
    want: &PropertyConstraints,
    max_n: usize,
) -> Result<Option<UnaryAlgebra>, SearchError> {
    if max_n > ENUM_CAP {
        return Err(SearchError::SizeCapExceeded { n: max_n, cap: ENUM_CAP });
    }
    for n in 1..=max_n {
        for lattice in enumerate_lattices(n)? {
            let lattice = Arc::new(lattice);
            for table in all_unary_tables(n) {
                let a = UnaryAlgebra::new(lattice.clone(), table)
                    .expect("odometer yields valid tables");
                if want.matches(&a) {
                    return Ok(Some(a));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> Arc<FiniteLattice> {
        Arc::new(FiniteLattice::from_covers(&["0", "1"], &[("0", "1")]).unwrap())
    }

    #[test]
    fn constraint_parsing() {
        let c = PropertyConstraints::parse("wom,+dwom,-dnl").unwrap();
        assert_eq!(c.wom, Some(true));
        assert_eq!(c.dwom, Some(true));
        assert_eq!(c.dnl, Some(false));
        assert_eq!(c.complementation, None);
        assert!(matches!(
            PropertyConstraints::parse("wom,bogus"),
            Err(SearchError::UnknownProperty(_))
        ));
        assert_eq!(c.to_string(), "+wom,+dwom,-dnl");
    }

    #[test]
    fn c2_dwom_tables() {
        let want = PropertyConstraints::parse("dwom").unwrap();
        let found = enumerate_unary(&c2(), &want).unwrap();
        let tables: Vec<&[usize]> = found.iter().map(|a| a.comp_table()).collect();
        // lexicographic order: constant-0 before the swap
        assert_eq!(tables, vec![&[0, 0][..], &[1, 0][..]]);
    }

    #[test]
    fn c2_wom_tables() {
        let want = PropertyConstraints::parse("wom").unwrap();
        let found = enumerate_unary(&c2(), &want).unwrap();
        let tables: Vec<&[usize]> = found.iter().map(|a| a.comp_table()).collect();
        assert_eq!(tables, vec![&[1, 0][..], &[1, 1][..]]);
    }

    #[test]
    fn c2_wom_and_dwom_is_the_swap() {
        let want = PropertyConstraints::parse("wom,dwom").unwrap();
        let found = enumerate_unary(&c2(), &want).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].comp_table(), &[1, 0]);
    }

    #[test]
    fn unconstrained_enumeration_counts_all_tables() {
        let want = PropertyConstraints::default();
        assert_eq!(enumerate_unary(&c2(), &want).unwrap().len(), 4);
        let m3 = Arc::new(
            FiniteLattice::from_covers(
                &["0", "a", "b", "c", "1"],
                &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
            )
            .unwrap(),
        );
        assert_eq!(enumerate_unary(&m3, &want).unwrap().len(), 3125);
    }

    #[test]
    fn work_cap_is_enforced() {
        let want = PropertyConstraints::default();
        let err = enumerate_unary_capped(&c2(), &want, 3).unwrap_err();
        assert_eq!(err, SearchError::WorkCapExceeded { candidates: 4, cap: 3 });
    }

    #[test]
    fn lattice_counts_small() {
        assert_eq!(enumerate_lattices(1).unwrap().len(), 1);
        assert_eq!(enumerate_lattices(2).unwrap().len(), 1);
        assert_eq!(enumerate_lattices(3).unwrap().len(), 1);
        assert_eq!(enumerate_lattices(4).unwrap().len(), 2);
        assert!(matches!(
            enumerate_lattices(8),
            Err(SearchError::SizeCapExceeded { n: 8, cap: ENUM_CAP })
        ));
    }

    /// Independent oracle for the five-element count: brute force over all
    /// sub-numeric relations on labeled points, transitively closed,
    /// filtered to lattices, deduplicated by canonical key. Every finite
    /// poset admits a natural labeling, so this hits every isomorphism
    /// class.
    #[test]
    fn lattice_count_n5_matches_brute_force_oracle() {
        let n = 5usize;
        let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
        let mut keys = std::collections::BTreeSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let mut leq = vec![false; n * n];
            for i in 0..n {
                leq[i * n + i] = true;
            }
            for (bit, &(i, j)) in pairs.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    leq[i * n + j] = true;
                }
            }
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
            if let Ok(l) = FiniteLattice::from_leq(names.clone(), leq) {
                keys.insert(l.canonical_form().unwrap());
            }
        }
        let enumerated = enumerate_lattices(n).unwrap();
        assert_eq!(enumerated.len(), keys.len());
        assert_eq!(enumerated.len(), 5);
    }

    #[test]
    fn enumerated_lattices_have_sorted_distinct_keys() {
        for n in 1..=5 {
            let ls = enumerate_lattices(n).unwrap();
            let keys: Vec<_> = ls.iter().map(|l| l.canonical_form().unwrap()).collect();
            let mut sorted = keys.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(keys, sorted, "n={n}");
        }
    }

    #[test]
    fn enumerated_algebras_repass_their_constraints() {
        let want = PropertyConstraints::parse("dwom,-dnl").unwrap();
        for n in 1..=4 {
            for l in enumerate_lattices(n).unwrap() {
                let l = Arc::new(l);
                for a in enumerate_unary(&l, &want).unwrap() {
                    assert!(a.is_dually_weakly_orthomodular().holds);
                    assert!(!a.satisfies_double_negation().holds);
                }
            }
        }
    }

    #[test]
    fn find_example_basics() {
        // plain independence needs no complementation: found on the
        // two-chain already
        let want = PropertyConstraints::parse("wom,-dwom").unwrap();
        let a = find_example(&want, 3).unwrap().expect("exists on the two-chain");
        assert_eq!(a.lattice().size(), 2);
        assert_eq!(a.comp_table(), &[1, 1]);

        // nothing satisfies wom with -wom
        let contradictory = PropertyConstraints {
            wom: Some(true),
            ..Default::default()
        };
        let mut impossible = contradictory.clone();
        impossible.dnl = Some(true);
        impossible.complementation = Some(true);
        impossible.orthocomplementation = Some(true);
        impossible.antitone = Some(false);
        assert!(find_example(&impossible, 2).unwrap().is_none());

        assert!(matches!(
            find_example(&contradictory, 9),
            Err(SearchError::SizeCapExceeded { .. })
        ));
    }

    #[test]
    fn fig2_matches_wom_dwom_dnl_not_ortho() {
        let want = PropertyConstraints::parse("wom,dwom,dnl,-ortho").unwrap();
        let fig2 = crate::fixtures::fixture("FIG2").unwrap();
        assert!(want.matches(&fig2));
    }
}
