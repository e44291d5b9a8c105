//! The three implication operations and their correspondence theorems.
//!
//! A D-implication is a binary operation satisfying three identities tied
//! to dual weak orthomodularity; a W-implication satisfies three identities
//! tied to weak orthomodularity with double negation; the Sasaki implication
//! `(x' /\ y') \/ y` characterizes weak orthomodularity on involutive
//! algebras. Each correspondence is verified constructively: derive the
//! operation from a unary table, check the axioms, recover the table, and
//! confirm the round trip is the identity on the full enumerated space.

use std::sync::Arc;

use itertools::Itertools;
use thiserror::Error;

use crate::algebra::{
    all_unary_tables, check_identity, BinaryOpTable, CheckReport, OpTag, UnaryAlgebra,
};
use crate::lattice::{FiniteLattice, ENUM_CAP};

/// Cap for `verify_family_bijection`: the family space is a product over
/// all principal filters, so it is kept smaller than the general cap.
pub const FAMILY_CAP: usize = 4;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ImplicationError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("operation needs a smallest element, which this lattice lacks")]
    NoBottom,
    #[error("{n} elements exceed the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

fn require(cond: bool, msg: &str) -> Result<(), ImplicationError> {
    if cond {
        Ok(())
    } else {
        Err(ImplicationError::PreconditionViolated(msg.to_string()))
    }
}

// ---------------------------------------------------------------------------
// D-implications
// ---------------------------------------------------------------------------

/// Checks the three D-implication axioms.
pub fn is_d_implication(arrow: &BinaryOpTable) -> CheckReport {
    let l = arrow.lattice();
    let r1 = check_identity(
        l,
        "d-implication",
        "(x \\/ y) -> x = y -> x",
        &["x", "y"],
        |v| {
            let (x, y) = (v[0], v[1]);
            (arrow.apply(l.join(x, y), x), arrow.apply(y, x))
        },
    );
    if !r1.holds {
        return r1;
    }
    let r2 = check_identity(
        l,
        "d-implication",
        "x \\/ y \\/ ((x \\/ z) -> y) = z -> (x \\/ y)",
        &["x", "y", "z"],
        |v| {
            let (x, y, z) = (v[0], v[1], v[2]);
            (
                l.join(l.join(x, y), arrow.apply(l.join(x, z), y)),
                arrow.apply(z, l.join(x, y)),
            )
        },
    );
    if !r2.holds {
        return r2;
    }
    check_identity(
        l,
        "d-implication",
        "(x \\/ y) /\\ (x -> y) = y",
        &["x", "y"],
        |v| {
            let (x, y) = (v[0], v[1]);
            (l.meet(l.join(x, y), arrow.apply(x, y)), y)
        },
    )
}

/// `x -> y := (x \/ y)' \/ y` for a dually weakly orthomodular algebra.
pub fn d_implication_from_complement(
    a: &UnaryAlgebra,
) -> Result<BinaryOpTable, ImplicationError> {
    let l = a.lattice();
    if l.bottom().is_none() {
        return Err(ImplicationError::NoBottom);
    }
    require(
        a.is_dually_weakly_orthomodular().holds,
        "algebra is not dually weakly orthomodular",
    )?;
    Ok(BinaryOpTable::from_fn(l.clone(), OpTag::Implication, |x, y| {
        l.join(a.comp(l.join(x, y)), y)
    }))
}

/// `x' := x -> 0` for a D-implication on a lattice with bottom.
pub fn complement_from_d_implication(
    arrow: &BinaryOpTable,
) -> Result<UnaryAlgebra, ImplicationError> {
    let l = arrow.lattice();
    let bottom = l.bottom().ok_or(ImplicationError::NoBottom)?;
    let axioms = is_d_implication(arrow);
    require(axioms.holds, &format!("not a D-implication: {}", axioms.detail))?;
    let comp: Vec<usize> = l.elements().map(|x| arrow.apply(x, bottom)).collect();
    Ok(UnaryAlgebra::new(l.clone(), comp).expect("table entries are elements"))
}

/// Verifies that the two constructions above are mutually inverse over the
/// full space of unary tables on `l`: every dually weakly orthomodular
/// table yields a D-implication that recovers it, and distinct tables yield
/// distinct implications.
pub fn verify_d_bijection(l: &Arc<FiniteLattice>) -> Result<CheckReport, ImplicationError> {
    let n = l.size();
    if n > ENUM_CAP {
        return Err(ImplicationError::CapExceeded { n, cap: ENUM_CAP });
    }
    if l.bottom().is_none() {
        return Err(ImplicationError::NoBottom);
    }
    let mut arrows: Vec<Vec<usize>> = Vec::new();
    for comp in all_unary_tables(n) {
        let a = UnaryAlgebra::new(l.clone(), comp).expect("odometer yields valid tables");
        if !a.is_dually_weakly_orthomodular().holds {
            continue;
        }
        let arrow = d_implication_from_complement(&a)?;
        let axioms = is_d_implication(&arrow);
        if !axioms.holds {
            return Ok(axioms.named("d-bijection"));
        }
        let recovered = complement_from_d_implication(&arrow)?;
        if recovered.comp_table() != a.comp_table() {
            return Ok(CheckReport::fail(
                "d-bijection",
                vec![],
                format!(
                    "round trip failed: comp {:?} derived arrow whose x -> 0 column is {:?}",
                    a.comp_table(),
                    recovered.comp_table()
                ),
            ));
        }
        if !recovered.is_dually_weakly_orthomodular().holds {
            return Ok(CheckReport::fail(
                "d-bijection",
                vec![],
                "recovered complement is not dually weakly orthomodular".to_string(),
            ));
        }
        arrows.push(arrow.entries().to_vec());
    }
    let count = arrows.len();
    arrows.sort();
    arrows.dedup();
    if arrows.len() != count {
        return Ok(CheckReport::fail(
            "d-bijection",
            vec![],
            "distinct complements produced identical D-implications".to_string(),
        ));
    }
    Ok(CheckReport::pass(
        "d-bijection",
        format!("{count} dually weakly orthomodular table(s) <-> {count} D-implication(s); all round trips pass"),
    ))
}

// ---------------------------------------------------------------------------
// Compatible families
// ---------------------------------------------------------------------------

/// For each element `x`, a unary operation on the principal filter `[x)`.
/// `ops[x][y]` is `Some(y^x)` exactly when `x <= y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibleFamily {
    lattice: Arc<FiniteLattice>,
    ops: Vec<Vec<Option<usize>>>,
}

impl CompatibleFamily {
    /// Validates shape: entries defined exactly on each filter and mapping
    /// into it.
    pub fn new(
        lattice: Arc<FiniteLattice>,
        ops: Vec<Vec<Option<usize>>>,
    ) -> Result<Self, ImplicationError> {
        let n = lattice.size();
        require(ops.len() == n, "family needs one table per element")?;
        for x in 0..n {
            require(ops[x].len() == n, "family tables must cover the carrier")?;
            for y in 0..n {
                match ops[x][y] {
                    Some(v) => {
                        require(lattice.leq(x, y), "family table defined outside its filter")?;
                        require(lattice.leq(x, v), "family table leaves its filter")?;
                    }
                    None => require(!lattice.leq(x, y), "family table undefined on its filter")?,
                }
            }
        }
        Ok(CompatibleFamily { lattice, ops })
    }

    pub fn lattice(&self) -> &Arc<FiniteLattice> {
        &self.lattice
    }

    /// `y^x`, defined when `x <= y`.
    pub fn apply(&self, x: usize, y: usize) -> Option<usize> {
        self.ops[x][y]
    }
}

/// `y^x := y -> x` for `x <= y`.
pub fn family_from_d_implication(
    arrow: &BinaryOpTable,
) -> Result<CompatibleFamily, ImplicationError> {
    let axioms = is_d_implication(arrow);
    require(axioms.holds, &format!("not a D-implication: {}", axioms.detail))?;
    let l = arrow.lattice();
    let n = l.size();
    let mut ops = vec![vec![None; n]; n];
    for x in l.elements() {
        for y in l.principal_filter(x) {
            ops[x][y] = Some(arrow.apply(y, x));
        }
    }
    CompatibleFamily::new(l.clone(), ops)
}

/// `x -> y := (x \/ y)^y` for a compatible family.
pub fn d_implication_from_family(
    fam: &CompatibleFamily,
) -> Result<BinaryOpTable, ImplicationError> {
    let check = is_compatible_family(fam);
    require(check.holds, &format!("not a compatible family: {}", check.detail))?;
    let l = fam.lattice();
    Ok(BinaryOpTable::from_fn(l.clone(), OpTag::Implication, |x, y| {
        fam.apply(y, l.join(x, y))
            .expect("x \\/ y lies in [y)")
    }))
}

/// A family is compatible when every `([x), ^x)` is dually weakly
/// orthomodular and `z^x \/ y = z^y` for all chains `x <= y <= z`.
pub fn is_compatible_family(fam: &CompatibleFamily) -> CheckReport {
    let l = fam.lattice();
    for x in l.elements() {
        let (sub, members) = l.interval_sublattice(x);
        let comp: Vec<usize> = members
            .iter()
            .map(|&y| {
                let v = fam.apply(x, y).expect("member of [x)");
                members.iter().position(|&m| m == v).expect("image stays in [x)")
            })
            .collect();
        let algebra = UnaryAlgebra::new(Arc::new(sub), comp).expect("translated table is total");
        let dwom = algebra.is_dually_weakly_orthomodular();
        if !dwom.holds {
            return CheckReport::fail(
                "compatible-family",
                vec![("x".to_string(), l.name(x).to_string())],
                format!(
                    "([{}), ^{}) is not dually weakly orthomodular: {}",
                    l.name(x),
                    l.name(x),
                    dwom.detail
                ),
            );
        }
    }
    for x in l.elements() {
        for y in l.principal_filter(x) {
            for z in l.principal_filter(y) {
                let zx = fam.apply(x, z).expect("z in [x)");
                let zy = fam.apply(y, z).expect("z in [y)");
                if l.join(zx, y) != zy {
                    return CheckReport::fail(
                        "compatible-family",
                        l.label_assignment(&["x", "y", "z"], &[x, y, z]),
                        format!(
                            "compatibility `z^x \\/ y = z^y` violated at x={}, y={}, z={}: lhs={}, rhs={}",
                            l.name(x),
                            l.name(y),
                            l.name(z),
                            l.name(l.join(zx, y)),
                            l.name(zy)
                        ),
                    );
                }
            }
        }
    }
    CheckReport::pass(
        "compatible-family",
        "every filter is dually weakly orthomodular and compatibility holds on all chains",
    )
}

/// Enumerates all compatible families directly (as products of per-filter
/// dually weakly orthomodular tables, filtered by the compatibility
/// condition) and all D-implications derived from dually weakly
/// orthomodular unary tables, then verifies the two enumerations are
/// related by mutually inverse maps.
pub fn verify_family_bijection(l: &Arc<FiniteLattice>) -> Result<CheckReport, ImplicationError> {
    let n = l.size();
    if n > FAMILY_CAP {
        return Err(ImplicationError::CapExceeded { n, cap: FAMILY_CAP });
    }
    if l.bottom().is_none() {
        return Err(ImplicationError::NoBottom);
    }

    // Per filter: all unary tables making ([x), ^x) dually weakly
    // orthomodular, kept as full-width rows keyed by parent ids.
    let mut per_filter: Vec<Vec<Vec<Option<usize>>>> = Vec::new();
    for x in l.elements() {
        let (sub, members) = l.interval_sublattice(x);
        let sub = Arc::new(sub);
        let mut rows = Vec::new();
        for table in all_unary_tables(members.len()) {
            let a = UnaryAlgebra::new(sub.clone(), table.clone()).expect("valid table");
            if a.is_dually_weakly_orthomodular().holds {
                let mut row = vec![None; n];
                for (i, &y) in members.iter().enumerate() {
                    row[y] = Some(members[table[i]]);
                }
                rows.push(row);
            }
        }
        per_filter.push(rows);
    }

    let mut families: Vec<CompatibleFamily> = Vec::new();
    for combo in per_filter.iter().multi_cartesian_product() {
        let ops: Vec<Vec<Option<usize>>> = combo.into_iter().cloned().collect();
        let fam = CompatibleFamily::new(l.clone(), ops)?;
        if is_compatible_family(&fam).holds {
            families.push(fam);
        }
    }

    // Families -> D-implications -> families must be the identity.
    let mut arrows_from_families: Vec<Vec<usize>> = Vec::new();
    for fam in &families {
        let arrow = d_implication_from_family(fam)?;
        let axioms = is_d_implication(&arrow);
        if !axioms.holds {
            return Ok(axioms.named("family-bijection"));
        }
        let back = family_from_d_implication(&arrow)?;
        if &back != fam {
            return Ok(CheckReport::fail(
                "family-bijection",
                vec![],
                "family -> D-implication -> family is not the identity".to_string(),
            ));
        }
        arrows_from_families.push(arrow.entries().to_vec());
    }
    let distinct = {
        let mut sorted = arrows_from_families.clone();
        sorted.sort();
        sorted.dedup();
        sorted.len()
    };
    if distinct != families.len() {
        return Ok(CheckReport::fail(
            "family-bijection",
            vec![],
            "distinct families produced identical D-implications".to_string(),
        ));
    }

    // D-implications from dually weakly orthomodular comps must hit exactly
    // the same set, with the reverse round trip also the identity.
    let mut arrows_from_comps: Vec<Vec<usize>> = Vec::new();
    for comp in all_unary_tables(n) {
        let a = UnaryAlgebra::new(l.clone(), comp).expect("valid table");
        if !a.is_dually_weakly_orthomodular().holds {
            continue;
        }
        let arrow = d_implication_from_complement(&a)?;
        let fam = family_from_d_implication(&arrow)?;
        let compat = is_compatible_family(&fam);
        if !compat.holds {
            return Ok(compat.named("family-bijection"));
        }
        let back = d_implication_from_family(&fam)?;
        if back.entries() != arrow.entries() {
            return Ok(CheckReport::fail(
                "family-bijection",
                vec![],
                "D-implication -> family -> D-implication is not the identity".to_string(),
            ));
        }
        arrows_from_comps.push(arrow.entries().to_vec());
    }

    let mut left = arrows_from_families.clone();
    let mut right = arrows_from_comps.clone();
    left.sort();
    right.sort();
    if left != right {
        return Ok(CheckReport::fail(
            "family-bijection",
            vec![],
            format!(
                "enumarations disagree: {} families vs {} complement-derived D-implications",
                families.len(),
                arrows_from_comps.len()
            ),
        ));
    }
    Ok(CheckReport::pass(
        "family-bijection",
        format!(
            "{} compatible families <-> {} D-implications; both round trips are the identity",
            families.len(),
            arrows_from_comps.len()
        ),
    ))
}

// ---------------------------------------------------------------------------
// Sasaki implication
// ---------------------------------------------------------------------------

/// `x -> y := (x' /\ y') \/ y`.
pub fn sasaki_implication(a: &UnaryAlgebra) -> BinaryOpTable {
    let l = a.lattice().clone();
    BinaryOpTable::from_fn(l.clone(), OpTag::Implication, |x, y| {
        l.join(l.meet(a.comp(x), a.comp(y)), y)
    })
}

/// On a bounded involutive algebra, weak orthomodularity holds iff
/// `0' = 1` and `(x -> 0) -> (x /\ y) = x` with the Sasaki arrow. This
/// computes both sides independently and reports whether they agree.
pub fn verify_sasaki_theorem(a: &UnaryAlgebra) -> Result<CheckReport, ImplicationError> {
    let l = a.lattice();
    let (bottom, top) = match (l.bottom(), l.top()) {
        (Some(b), Some(t)) => (b, t),
        _ => {
            return Err(ImplicationError::PreconditionViolated(
                "lattice is not bounded".to_string(),
            ))
        }
    };
    require(
        a.satisfies_double_negation().holds,
        "double negation law fails; the Sasaki characterization assumes (x')' = x",
    )?;
    let wom = a.is_weakly_orthomodular().holds;

    let arrow = sasaki_implication(a);
    let zero_comp = a.comp(bottom) == top;
    let identity = check_identity(
        l,
        "sasaki",
        "(x -> 0) -> (x /\\ y) = x",
        &["x", "y"],
        |v| {
            let (x, y) = (v[0], v[1]);
            (arrow.apply(arrow.apply(x, bottom), l.meet(x, y)), x)
        },
    );
    let sasaki_side = zero_comp && identity.holds;
    let detail = format!(
        "wom={wom}; sasaki side={sasaki_side} (0'=1: {zero_comp}, identity: {})",
        identity.holds
    );
    if wom == sasaki_side {
        Ok(CheckReport::pass("sasaki", detail))
    } else {
        Ok(CheckReport::fail(
            "sasaki",
            vec![],
            format!("the two sides of the characterization disagree: {detail}"),
        ))
    }
}

// ---------------------------------------------------------------------------
// W-implications
// ---------------------------------------------------------------------------

/// Checks the three W-implication axioms (they mention `0`, so a bottom is
/// required).
pub fn is_w_implication(arrow: &BinaryOpTable) -> Result<CheckReport, ImplicationError> {
    let l = arrow.lattice();
    let bottom = l.bottom().ok_or(ImplicationError::NoBottom)?;
    let r1 = check_identity(l, "w-implication", "(x -> 0) -> 0 = x", &["x"], |v| {
        let x = v[0];
        (arrow.apply(arrow.apply(x, bottom), bottom), x)
    });
    if !r1.holds {
        return Ok(r1);
    }
    let r2 = check_identity(
        l,
        "w-implication",
        "((x /\\ y) -> 0) -> x = x",
        &["x", "y"],
        |v| {
            let (x, y) = (v[0], v[1]);
            (arrow.apply(arrow.apply(l.meet(x, y), bottom), x), x)
        },
    );
    if !r2.holds {
        return Ok(r2);
    }
    Ok(check_identity(
        l,
        "w-implication",
        "(x /\\ y) \\/ (x -> 0) = x -> y",
        &["x", "y"],
        |v| {
            let (x, y) = (v[0], v[1]);
            (l.join(l.meet(x, y), arrow.apply(x, bottom)), arrow.apply(x, y))
        },
    ))
}

/// `x -> y := x' \/ (x /\ y)` for a weakly orthomodular algebra with the
/// double negation law.
pub fn w_implication_from_complement(
    a: &UnaryAlgebra,
) -> Result<BinaryOpTable, ImplicationError> {
    let l = a.lattice();
    if l.bottom().is_none() {
        return Err(ImplicationError::NoBottom);
    }
    require(a.is_weakly_orthomodular().holds, "algebra is not weakly orthomodular")?;
    require(
        a.satisfies_double_negation().holds,
        "algebra does not satisfy the double negation law",
    )?;
    Ok(BinaryOpTable::from_fn(l.clone(), OpTag::Implication, |x, y| {
        l.join(a.comp(x), l.meet(x, y))
    }))
}

/// `x' := x -> 0` for a W-implication.
pub fn complement_from_w_implication(
    arrow: &BinaryOpTable,
) -> Result<UnaryAlgebra, ImplicationError> {
    let l = arrow.lattice();
    let bottom = l.bottom().ok_or(ImplicationError::NoBottom)?;
    let axioms = is_w_implication(arrow)?;
    require(axioms.holds, &format!("not a W-implication: {}", axioms.detail))?;
    let comp: Vec<usize> = l.elements().map(|x| arrow.apply(x, bottom)).collect();
    Ok(UnaryAlgebra::new(l.clone(), comp).expect("table entries are elements"))
}

/// Mirror of `verify_d_bijection` for the W-implication pair, over all
/// weakly orthomodular tables satisfying the double negation law.
pub fn verify_w_bijection(l: &Arc<FiniteLattice>) -> Result<CheckReport, ImplicationError> {
    let n = l.size();
    if n > ENUM_CAP {
        return Err(ImplicationError::CapExceeded { n, cap: ENUM_CAP });
    }
    if l.bottom().is_none() {
        return Err(ImplicationError::NoBottom);
    }
    let mut arrows: Vec<Vec<usize>> = Vec::new();
    for comp in all_unary_tables(n) {
        let a = UnaryAlgebra::new(l.clone(), comp).expect("valid table");
        if !(a.is_weakly_orthomodular().holds && a.satisfies_double_negation().holds) {
            continue;
        }
        let arrow = w_implication_from_complement(&a)?;
        let axioms = is_w_implication(&arrow)?;
        if !axioms.holds {
            return Ok(axioms.named("w-bijection"));
        }
        let recovered = complement_from_w_implication(&arrow)?;
        if recovered.comp_table() != a.comp_table() {
            return Ok(CheckReport::fail(
                "w-bijection",
                vec![],
                format!(
                    "round trip failed: comp {:?} derived arrow whose x -> 0 column is {:?}",
                    a.comp_table(),
                    recovered.comp_table()
                ),
            ));
        }
        let wom = recovered.is_weakly_orthomodular();
        let dnl = recovered.satisfies_double_negation();
        if !(wom.holds && dnl.holds) {
            return Ok(CheckReport::fail(
                "w-bijection",
                vec![],
                "recovered complement lost weak orthomodularity or double negation".to_string(),
            ));
        }
        arrows.push(arrow.entries().to_vec());
    }
    let count = arrows.len();
    arrows.sort();
    arrows.dedup();
    if arrows.len() != count {
        return Ok(CheckReport::fail(
            "w-bijection",
            vec![],
            "distinct complements produced identical W-implications".to_string(),
        ));
    }
    Ok(CheckReport::pass(
        "w-bijection",
        format!("{count} weakly orthomodular table(s) with double negation <-> {count} W-implication(s); all round trips pass"),
    ))
}

// ---------------------------------------------------------------------------
// Elementary properties
// ---------------------------------------------------------------------------

/// Elementary properties of the derived D-implication on a dually weakly
/// orthomodular algebra: `x -> 0 = x'`, and when a top exists `x -> 1 = 1`,
/// `1 -> x = x` and `x -> y = 1 implies x <= y`.
pub fn d_implication_properties(a: &UnaryAlgebra) -> Result<CheckReport, ImplicationError> {
    require(
        a.is_dually_weakly_orthomodular().holds,
        "algebra is not dually weakly orthomodular",
    )?;
    let l = a.lattice();
    let arrow = d_implication_from_complement(a)?;
    let bottom = l.bottom().ok_or(ImplicationError::NoBottom)?;

    let r = check_identity(l, "d-properties", "x -> 0 = x'", &["x"], |v| {
        (arrow.apply(v[0], bottom), a.comp(v[0]))
    });
    if !r.holds {
        return Ok(r);
    }
    let mut clauses = vec!["x -> 0 = x'".to_string()];
    if let Some(top) = l.top() {
        let r = check_identity(l, "d-properties", "x -> 1 = 1", &["x"], |v| {
            (arrow.apply(v[0], top), top)
        });
        if !r.holds {
            return Ok(r);
        }
        let r = check_identity(l, "d-properties", "1 -> x = x", &["x"], |v| {
            (arrow.apply(top, v[0]), v[0])
        });
        if !r.holds {
            return Ok(r);
        }
        for x in l.elements() {
            for y in l.elements() {
                if arrow.apply(x, y) == top && !l.leq(x, y) {
                    return Ok(CheckReport::fail(
                        "d-properties",
                        l.label_assignment(&["x", "y"], &[x, y]),
                        format!(
                            "`x -> y = 1 implies x <= y` violated at x={}, y={}",
                            l.name(x),
                            l.name(y)
                        ),
                    ));
                }
            }
        }
        clauses.push("x -> 1 = 1".to_string());
        clauses.push("1 -> x = x".to_string());
        clauses.push("x -> y = 1 implies x <= y".to_string());
    }
    Ok(CheckReport::pass("d-properties", clauses.join("; ")))
}

/// Elementary properties of the derived W-implication on a weakly
/// orthomodular algebra (a top exists by the boundedness lemma).
pub fn w_implication_properties(a: &UnaryAlgebra) -> Result<CheckReport, ImplicationError> {
    require(a.is_weakly_orthomodular().holds, "algebra is not weakly orthomodular")?;
    let l = a.lattice();
    let top = l
        .top()
        .ok_or_else(|| ImplicationError::PreconditionViolated("no greatest element".into()))?;
    let arrow = BinaryOpTable::from_fn(l.clone(), OpTag::Implication, |x, y| {
        l.join(a.comp(x), l.meet(x, y))
    });

    let checks: [(&str, Box<dyn Fn(&[usize]) -> (usize, usize)>); 4] = [
        ("x -> x = 1", Box::new(|v: &[usize]| (arrow.apply(v[0], v[0]), top))),
        ("x -> 1 = 1", Box::new(|v: &[usize]| (arrow.apply(v[0], top), top))),
        (
            "x \\/ (x -> y) = 1",
            Box::new(|v: &[usize]| (l.join(v[0], arrow.apply(v[0], v[1])), top)),
        ),
        (
            "x -> (x /\\ y) = x -> y",
            Box::new(|v: &[usize]| {
                (arrow.apply(v[0], l.meet(v[0], v[1])), arrow.apply(v[0], v[1]))
            }),
        ),
    ];
    for (formula, sides) in &checks {
        let vars: &[&str] = if formula.contains('y') { &["x", "y"] } else { &["x"] };
        let r = check_identity(l, "w-properties", formula, vars, sides);
        if !r.holds {
            return Ok(r);
        }
    }
    for x in l.elements() {
        for y in l.elements() {
            if l.leq(x, y) && arrow.apply(x, y) != top {
                return Ok(CheckReport::fail(
                    "w-properties",
                    l.label_assignment(&["x", "y"], &[x, y]),
                    format!(
                        "`x <= y implies x -> y = 1` violated at x={}, y={}",
                        l.name(x),
                        l.name(y)
                    ),
                ));
            }
        }
    }
    let mut clauses = vec![
        "x -> x = 1".to_string(),
        "x -> 1 = 1".to_string(),
        "x \\/ (x -> y) = 1".to_string(),
        "x -> (x /\\ y) = x -> y".to_string(),
        "x <= y implies x -> y = 1".to_string(),
    ];
    if let Some(bottom) = l.bottom() {
        let r = check_identity(l, "w-properties", "x -> 0 = x'", &["x"], |v| {
            (arrow.apply(v[0], bottom), a.comp(v[0]))
        });
        if !r.holds {
            return Ok(r);
        }
        clauses.push("x -> 0 = x'".to_string());
    }
    Ok(CheckReport::pass("w-properties", clauses.join("; ")))
}
