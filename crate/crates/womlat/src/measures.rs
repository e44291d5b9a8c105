//! Generalized measures `s : L -> [0,1]` over exact rationals, the two
//! membership classes S1 and S2, the witness constructions on principal
//! filters and ideals, conditions (i)-(iv), and the executable form of the
//! measure characterization of weak and dual weak orthomodularity.
//!
//! All arithmetic is exact: membership and preimage tests are equality
//! tests on rationals, so floating point is never used. Sums in condition
//! (ii) are computed without clamping; a sum above 1 simply fails the
//! equation.

use num_rational::Rational64;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{CheckReport, UnaryAlgebra};
use crate::lattice::FiniteLattice;

pub type Rational = Rational64;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum MeasureError {
    #[error("measure value {value} for element `{label}` is outside [0,1]")]
    OutOfRange { label: String, value: String },
    #[error("measure must assign a value to every element: expected {expected}, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("condition (i) needs a greatest element, which this lattice lacks")]
    NoTop,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

/// An exact-rational map from lattice elements (by id) into `[0,1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedMeasure {
    values: Vec<Rational>,
}

impl GeneralizedMeasure {
    pub fn new(l: &FiniteLattice, values: Vec<Rational>) -> Result<Self, MeasureError> {
        if values.len() != l.size() {
            return Err(MeasureError::WrongLength { expected: l.size(), got: values.len() });
        }
        for (i, v) in values.iter().enumerate() {
            if *v < Rational::zero() || *v > Rational::one() {
                return Err(MeasureError::OutOfRange {
                    label: l.name(i).to_string(),
                    value: v.to_string(),
                });
            }
        }
        Ok(GeneralizedMeasure { values })
    }

    pub fn constant(l: &FiniteLattice, v: Rational) -> Result<Self, MeasureError> {
        Self::new(l, vec![v; l.size()])
    }

    pub fn value(&self, x: usize) -> Rational {
        self.values[x]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

fn half() -> Rational {
    Rational::new(1, 2)
}

/// `s = 1` on the filter `[x)` and `1/2` elsewhere, so `s^-1({1}) = [x)`.
pub fn witness_measure_filter(l: &FiniteLattice, x: usize) -> GeneralizedMeasure {
    let values = l
        .elements()
        .map(|y| if l.leq(x, y) { Rational::one() } else { half() })
        .collect();
    GeneralizedMeasure { values }
}

/// `s = 0` on the ideal `(x]` and `1/2` elsewhere, so `s^-1({0}) = (x]`.
pub fn witness_measure_ideal(l: &FiniteLattice, x: usize) -> GeneralizedMeasure {
    let values = l
        .elements()
        .map(|y| if l.leq(y, x) { Rational::zero() } else { half() })
        .collect();
    GeneralizedMeasure { values }
}

fn pair_scan(
    a: &UnaryAlgebra,
    property: &str,
    statement: &str,
    sides: impl Fn(usize, usize) -> (Rational, Rational),
) -> CheckReport {
    let l = a.lattice();
    for x in l.elements() {
        for y in l.elements() {
            if !l.leq(x, y) {
                continue;
            }
            let (lhs, rhs) = sides(x, y);
            if lhs != rhs {
                return CheckReport::fail(
                    property,
                    l.label_assignment(&["x", "y"], &[x, y]),
                    format!(
                        "`{statement}` violated at x={}, y={}: lhs={lhs}, rhs={rhs}",
                        l.name(x),
                        l.name(y)
                    ),
                );
            }
        }
    }
    CheckReport::pass(property, format!("`{statement}` holds for all comparable pairs"))
}

/// Membership in S1: `s(x \/ (y /\ x')) = s(y)` for all `x <= y`.
pub fn in_s1(a: &UnaryAlgebra, s: &GeneralizedMeasure) -> CheckReport {
    let l = a.lattice();
    pair_scan(a, "s1", "s(x \\/ (y /\\ x')) = s(y)", |x, y| {
        (s.value(l.join(x, l.meet(y, a.comp(x)))), s.value(y))
    })
}

/// Membership in S2: `s(y /\ (x \/ y')) = s(x)` for all `x <= y`.
pub fn in_s2(a: &UnaryAlgebra, s: &GeneralizedMeasure) -> CheckReport {
    let l = a.lattice();
    pair_scan(a, "s2", "s(y /\\ (x \\/ y')) = s(x)", |x, y| {
        (s.value(l.meet(y, l.join(x, a.comp(y)))), s.value(x))
    })
}

/// Both sides of the measure characterization, decided exactly.
///
/// Existence side: for every `x` other than the bottom, the canonical
/// filter witness must lie in S1 with `s^-1({1}) = [x)` (dually for S2 and
/// ideals). Necessity side: when (dual) weak orthomodularity fails, a
/// violating comparable pair certifies that no such measure can exist for
/// the corresponding element. The report asserts the existence decisions
/// agree with the predicates.
pub fn verify_measure_theorem(a: &UnaryAlgebra) -> CheckReport {
    let l = a.lattice();
    let wom = a.is_weakly_orthomodular();
    let dwom = a.is_dually_weakly_orthomodular();

    let mut s1_exists = true;
    let mut s1_detail = String::new();
    for x in l.elements() {
        if Some(x) == l.bottom() {
            continue;
        }
        let s = witness_measure_filter(l, x);
        let member = in_s1(a, &s);
        let preimage_ok = l
            .elements()
            .all(|y| (s.value(y) == Rational::one()) == l.leq(x, y));
        if !(member.holds && preimage_ok) {
            s1_exists = false;
            s1_detail = format!(
                "filter witness for x={} fails: {}",
                l.name(x),
                if member.holds { "preimage mismatch".to_string() } else { member.detail }
            );
            break;
        }
    }
    // Certificate: a violating pair pins down the element with no measure.
    if !wom.holds {
        let w = wom.witness.as_ref().expect("failed check carries a witness");
        let wx = l.element(&w[0].1).expect("witness labels are elements");
        let wy = l.element(&w[1].1).expect("witness labels are elements");
        // Convert the identity witness to a comparable pair: p = x /\ y <= x = q.
        let p = l.meet(wx, wy);
        let q = wx;
        let bad = l.join(p, l.meet(q, a.comp(p)));
        debug_assert!(l.leq(p, q) && bad != q);
        s1_detail = format!(
            "{s1_detail}; certificate: {} <= {} with {} \\/ ({} /\\ {}') = {} < {}, so any s in S1 with s^-1({{1}}) = [{}) would force s({}) = 1",
            l.name(p), l.name(q), l.name(p), l.name(q), l.name(p), l.name(bad), l.name(q),
            l.name(q), l.name(bad)
        );
    }

    let mut s2_exists = true;
    let mut s2_detail = String::new();
    for x in l.elements() {
        if Some(x) == l.top() {
            continue;
        }
        let s = witness_measure_ideal(l, x);
        let member = in_s2(a, &s);
        let preimage_ok = l
            .elements()
            .all(|y| (s.value(y) == Rational::zero()) == l.leq(y, x));
        if !(member.holds && preimage_ok) {
            s2_exists = false;
            s2_detail = format!(
                "ideal witness for x={} fails: {}",
                l.name(x),
                if member.holds { "preimage mismatch".to_string() } else { member.detail }
            );
            break;
        }
    }
    if !dwom.holds {
        let w = dwom.witness.as_ref().expect("failed check carries a witness");
        let wx = l.element(&w[0].1).expect("witness labels are elements");
        let wy = l.element(&w[1].1).expect("witness labels are elements");
        // p = x <= x \/ y = q; the dual identity fails as q /\ (p \/ q') != p.
        let p = wx;
        let q = l.join(wx, wy);
        let bad = l.meet(q, l.join(p, a.comp(q)));
        debug_assert!(l.leq(p, q) && bad != p);
        s2_detail = format!(
            "{s2_detail}; certificate: {} <= {} with {} /\\ ({} \\/ {}') = {} > {}, so any s in S2 with s^-1({{0}}) = ({}] would force s({}) = 0",
            l.name(p), l.name(q), l.name(q), l.name(p), l.name(q), l.name(bad), l.name(p),
            l.name(p), l.name(bad)
        );
    }

    let s1_agrees = s1_exists == wom.holds;
    let s2_agrees = s2_exists == dwom.holds;
    let detail = format!(
        "wom={} / S1-existence={}; dwom={} / S2-existence={}{}{}",
        wom.holds,
        s1_exists,
        dwom.holds,
        s2_exists,
        if s1_detail.is_empty() { String::new() } else { format!("; {s1_detail}") },
        if s2_detail.is_empty() { String::new() } else { format!("; {s2_detail}") },
    );
    if s1_agrees && s2_agrees {
        CheckReport::pass("measures", detail)
    } else {
        CheckReport::fail(
            "measures",
            vec![],
            format!("existence decisions disagree with the predicates: {detail}"),
        )
    }
}

/// The four conditions, each reported separately with its first witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionsReport {
    pub c1: CheckReport,
    pub c2: CheckReport,
    pub c3: CheckReport,
    pub c4: CheckReport,
}

impl ConditionsReport {
    pub fn all_hold(&self) -> bool {
        self.c1.holds && self.c2.holds && self.c3.holds && self.c4.holds
    }

    pub fn reports(&self) -> [&CheckReport; 4] {
        [&self.c1, &self.c2, &self.c3, &self.c4]
    }
}

/// Conditions (i)-(iv): `s(1) = 1`; for `x <= y`: `s(x \/ y') = s(x) + s(y')`,
/// `s((x \/ y') \/ (x' /\ y)) = 1`, and `s(x \/ (y /\ (x \/ y'))') = 1`.
pub fn check_conditions(
    a: &UnaryAlgebra,
    s: &GeneralizedMeasure,
) -> Result<ConditionsReport, MeasureError> {
    let l = a.lattice();
    let top = l.top().ok_or(MeasureError::NoTop)?;
    let one = Rational::one();

    let c1 = if s.value(top) == one {
        CheckReport::pass("condition-i", "s(1) = 1")
    } else {
        CheckReport::fail(
            "condition-i",
            l.label_assignment(&["x"], &[top]),
            format!("s(1) = {} instead of 1", s.value(top)),
        )
    };
    let c2 = pair_scan(a, "condition-ii", "s(x \\/ y') = s(x) + s(y')", |x, y| {
        let yc = a.comp(y);
        (s.value(l.join(x, yc)), s.value(x) + s.value(yc))
    })
    .named("condition-ii");
    let c3 = pair_scan(
        a,
        "condition-iii",
        "s((x \\/ y') \\/ (x' /\\ y)) = 1",
        |x, y| {
            let v = l.join(l.join(x, a.comp(y)), l.meet(a.comp(x), y));
            (s.value(v), one)
        },
    );
    let c4 = pair_scan(
        a,
        "condition-iv",
        "s(x \\/ (y /\\ (x \\/ y'))') = 1",
        |x, y| {
            let v = l.join(x, a.comp(l.meet(y, l.join(x, a.comp(y)))));
            (s.value(v), one)
        },
    );
    Ok(ConditionsReport { c1, c2, c3, c4 })
}

/// On a complementation: (i)+(ii)+(iii) imply membership in S1 and
/// (i)+(ii)+(iv) imply membership in S2. Both implications are asserted;
/// either may hold vacuously.
pub fn verify_conditions_proposition(
    a: &UnaryAlgebra,
    s: &GeneralizedMeasure,
) -> Result<CheckReport, MeasureError> {
    let comp = a
        .is_complementation()
        .map_err(|_| MeasureError::NoTop)?;
    if !comp.holds {
        return Err(MeasureError::PreconditionViolated(format!(
            "unary operation is not a complementation: {}",
            comp.detail
        )));
    }
    let flags = check_conditions(a, s)?;
    let base = flags.c1.holds && flags.c2.holds;

    let mut clauses = Vec::new();
    if base && flags.c3.holds {
        let member = in_s1(a, s);
        if !member.holds {
            return Ok(CheckReport::fail(
                "conditions-proposition",
                member.witness.unwrap(),
                format!("(i)+(ii)+(iii) hold but s is not in S1: {}", member.detail),
            ));
        }
        clauses.push("(i)+(ii)+(iii) => s in S1 (non-vacuous)");
    } else {
        clauses.push("(i)+(ii)+(iii) => s in S1 (vacuous)");
    }
    if base && flags.c4.holds {
        let member = in_s2(a, s);
        if !member.holds {
            return Ok(CheckReport::fail(
                "conditions-proposition",
                member.witness.unwrap(),
                format!("(i)+(ii)+(iv) hold but s is not in S2: {}", member.detail),
            ));
        }
        clauses.push("(i)+(ii)+(iv) => s in S2 (non-vacuous)");
    } else {
        clauses.push("(i)+(ii)+(iv) => s in S2 (vacuous)");
    }
    Ok(CheckReport::pass("conditions-proposition", clauses.join("; ")))
}

/// Deterministic pseudo-random measures with denominators up to 8, for
/// sampling-style tests. Same seed, same measures.
pub fn sample_measures(l: &FiniteLattice, count: usize, seed: u64) -> Vec<GeneralizedMeasure> {
    let mut state = seed;
    let mut next = move || {
        // splitmix64
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    (0..count)
        .map(|_| {
            let values = l
                .elements()
                .map(|_| {
                    let q = (next() % 8 + 1) as i64;
                    let p = (next() % (q as u64 + 1)) as i64;
                    Rational::new(p, q)
                })
                .collect();
            GeneralizedMeasure { values }
        })
        .collect()
}
