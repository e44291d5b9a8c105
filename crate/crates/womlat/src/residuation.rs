//! The product `x (.) y = (x \/ y') /\ y`, adjointness checks, and the left
//! residuated l-groupoid built from algebras that are weakly and dually
//! weakly orthomodular with double negation — plus the converse
//! reconstruction of the unary operation from such a groupoid.
//!
//! `build_lgroupoid` does not trust the construction: every conclusion of
//! the underlying result (unit laws, adjointness in both directions, the
//! divisibility-style identity, the order characterizations) is re-checked
//! on the finished tables, so a violation surfaces as `InvariantFailed`
//! instead of propagating silently.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{check_identity, BinaryOpTable, CheckReport, OpTag, UnaryAlgebra};
use crate::lattice::FiniteLattice;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ResiduationError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("construction invariant failed: {0}")]
    InvariantFailed(String),
    #[error("lattice is not bounded")]
    NoBounds,
}

fn require(cond: bool, msg: &str) -> Result<(), ResiduationError> {
    if cond {
        Ok(())
    } else {
        Err(ResiduationError::PreconditionViolated(msg.to_string()))
    }
}

/// `x (.) y := (x \/ y') /\ y`, the Sasaki projection of `x` onto `y`.
pub fn sasaki_product(a: &UnaryAlgebra) -> BinaryOpTable {
    let l = a.lattice().clone();
    BinaryOpTable::from_fn(l.clone(), OpTag::Product, |x, y| {
        l.meet(l.join(x, a.comp(y)), y)
    })
}

fn w_arrow(a: &UnaryAlgebra) -> BinaryOpTable {
    let l = a.lattice().clone();
    BinaryOpTable::from_fn(l.clone(), OpTag::Implication, |x, y| {
        l.join(a.comp(x), l.meet(x, y))
    })
}

/// Forward half of adjointness on a dually weakly orthomodular algebra:
/// `a <= b -> c` implies `a (.) b <= c`, with the product and arrow built
/// from the unary table. The backward half may fail here; it is not
/// asserted.
pub fn check_half_adjunction(a: &UnaryAlgebra) -> Result<CheckReport, ResiduationError> {
    require(
        a.is_dually_weakly_orthomodular().holds,
        "algebra is not dually weakly orthomodular",
    )?;
    let l = a.lattice();
    let prod = sasaki_product(a);
    let arrow = w_arrow(a);
    for x in l.elements() {
        for y in l.elements() {
            for z in l.elements() {
                if l.leq(x, arrow.apply(y, z)) && !l.leq(prod.apply(x, y), z) {
                    return Ok(CheckReport::fail(
                        "half-adjunction",
                        l.label_assignment(&["a", "b", "c"], &[x, y, z]),
                        format!(
                            "`a <= b -> c implies a (.) b <= c` violated at a={}, b={}, c={}: a (.) b = {}",
                            l.name(x),
                            l.name(y),
                            l.name(z),
                            l.name(prod.apply(x, y))
                        ),
                    ));
                }
            }
        }
    }
    Ok(CheckReport::pass(
        "half-adjunction",
        format!(
            "a <= b -> c implies a (.) b <= c over all {} triples",
            l.size().pow(3)
        ),
    ))
}

/// On algebras that are weakly and dually weakly orthomodular and satisfy
/// the weak double negation law `((x')')' = x'`: the identity
/// `(x -> y) (.) x = x /\ y` and the restricted adjointness biconditional
/// `a (.) (b')' <= c iff a <= (b')' -> c`.
pub fn check_weak_dnl_residuation(a: &UnaryAlgebra) -> Result<CheckReport, ResiduationError> {
    require(a.is_weakly_orthomodular().holds, "algebra is not weakly orthomodular")?;
    require(
        a.is_dually_weakly_orthomodular().holds,
        "algebra is not dually weakly orthomodular",
    )?;
    require(
        a.satisfies_weak_double_negation().holds,
        "algebra does not satisfy ((x')')' = x'",
    )?;
    let l = a.lattice();
    let prod = sasaki_product(a);
    let arrow = w_arrow(a);
    let identity = check_identity(
        l,
        "weak-dnl-residuation",
        "(x -> y) * x = x /\\ y",
        &["x", "y"],
        |v| {
            let (x, y) = (v[0], v[1]);
            (prod.apply(arrow.apply(x, y), x), l.meet(x, y))
        },
    );
    if !identity.holds {
        return Ok(identity);
    }
    for x in l.elements() {
        for y in l.elements() {
            for z in l.elements() {
                let ydd = a.comp(a.comp(y));
                let forward = l.leq(prod.apply(x, ydd), z);
                let backward = l.leq(x, arrow.apply(ydd, z));
                if forward != backward {
                    return Ok(CheckReport::fail(
                        "weak-dnl-residuation",
                        l.label_assignment(&["a", "b", "c"], &[x, y, z]),
                        format!(
                            "`a (.) (b')' <= c iff a <= (b')' -> c` violated at a={}, b={}, c={}: lhs={forward}, rhs={backward}",
                            l.name(x),
                            l.name(y),
                            l.name(z)
                        ),
                    ));
                }
            }
        }
    }
    Ok(CheckReport::pass(
        "weak-dnl-residuation",
        "(x -> y) * x = x /\\ y and a (.) (b')' <= c iff a <= (b')' -> c over all triples",
    ))
}

/// A bounded lattice with product and arrow satisfying the unit laws and
/// full adjointness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LGroupoid {
    lattice: Arc<FiniteLattice>,
    prod: BinaryOpTable,
    arrow: BinaryOpTable,
}

impl LGroupoid {
    /// Wraps pre-existing tables without checking the groupoid laws; run
    /// `is_left_residuated_lgroupoid` to classify.
    pub fn from_tables(
        prod: BinaryOpTable,
        arrow: BinaryOpTable,
    ) -> Result<Self, ResiduationError> {
        require(
            Arc::ptr_eq(prod.lattice(), arrow.lattice()) || prod.lattice() == arrow.lattice(),
            "product and arrow live on different lattices",
        )?;
        let lattice = prod.lattice().clone();
        if lattice.bottom().is_none() || lattice.top().is_none() {
            return Err(ResiduationError::NoBounds);
        }
        Ok(LGroupoid { lattice, prod, arrow })
    }

    pub fn lattice(&self) -> &Arc<FiniteLattice> {
        &self.lattice
    }

    pub fn prod(&self) -> &BinaryOpTable {
        &self.prod
    }

    pub fn arrow(&self) -> &BinaryOpTable {
        &self.arrow
    }

    /// Informational only: whether the product happens to be associative.
    /// Nothing in the construction promises this.
    pub fn product_is_associative(&self) -> bool {
        let l = &self.lattice;
        l.elements().all(|x| {
            l.elements().all(|y| {
                l.elements().all(|z| {
                    self.prod.apply(self.prod.apply(x, y), z)
                        == self.prod.apply(x, self.prod.apply(y, z))
                })
            })
        })
    }
}

/// Checks the unit laws and the adjointness biconditional
/// `x (.) y <= z iff x <= y -> z` over all triples. The report says which
/// direction of the biconditional failed.
pub fn is_left_residuated_lgroupoid(
    prod: &BinaryOpTable,
    arrow: &BinaryOpTable,
) -> Result<CheckReport, ResiduationError> {
    let l = prod.lattice();
    let top = match (l.bottom(), l.top()) {
        (Some(_), Some(t)) => t,
        _ => return Err(ResiduationError::NoBounds),
    };
    let units = check_identity(l, "lgroupoid", "x * 1 = x", &["x"], |v| {
        (prod.apply(v[0], top), v[0])
    });
    if !units.holds {
        return Ok(units);
    }
    let units = check_identity(l, "lgroupoid", "1 * x = x", &["x"], |v| {
        (prod.apply(top, v[0]), v[0])
    });
    if !units.holds {
        return Ok(units);
    }
    for x in l.elements() {
        for y in l.elements() {
            for z in l.elements() {
                let forward = l.leq(prod.apply(x, y), z);
                let backward = l.leq(x, arrow.apply(y, z));
                if forward != backward {
                    let direction = if forward {
                        "x (.) y <= z holds but x <= y -> z fails"
                    } else {
                        "x <= y -> z holds but x (.) y <= z fails"
                    };
                    return Ok(CheckReport::fail(
                        "lgroupoid",
                        l.label_assignment(&["x", "y", "z"], &[x, y, z]),
                        format!(
                            "adjointness violated at x={}, y={}, z={}: {direction}",
                            l.name(x),
                            l.name(y),
                            l.name(z)
                        ),
                    ));
                }
            }
        }
    }
    Ok(CheckReport::pass(
        "lgroupoid",
        "unit laws and adjointness hold over all triples",
    ))
}

/// Builds the left residuated l-groupoid from a weakly and dually weakly
/// orthomodular algebra with double negation, then re-verifies every
/// conclusion. A failure here would be an implementation bug, surfaced as
/// `InvariantFailed`.
pub fn build_lgroupoid(a: &UnaryAlgebra) -> Result<LGroupoid, ResiduationError> {
    require(a.is_weakly_orthomodular().holds, "algebra is not weakly orthomodular")?;
    require(
        a.is_dually_weakly_orthomodular().holds,
        "algebra is not dually weakly orthomodular",
    )?;
    require(
        a.satisfies_double_negation().holds,
        "algebra does not satisfy the double negation law",
    )?;
    let l = a.lattice();
    let g = LGroupoid::from_tables(sasaki_product(a), w_arrow(a))?;

    let laws = is_left_residuated_lgroupoid(&g.prod, &g.arrow)?;
    if !laws.holds {
        return Err(ResiduationError::InvariantFailed(laws.detail));
    }
    let divis = check_identity(l, "lgroupoid", "(x -> y) * x = x /\\ y", &["x", "y"], |v| {
        let (x, y) = (v[0], v[1]);
        (g.prod.apply(g.arrow.apply(x, y), x), l.meet(x, y))
    });
    if !divis.holds {
        return Err(ResiduationError::InvariantFailed(divis.detail));
    }
    for x in l.elements() {
        for y in l.elements() {
            if (g.prod.apply(x, y) == x) != l.leq(x, y) {
                return Err(ResiduationError::InvariantFailed(format!(
                    "`a (.) b = a iff a <= b` fails at a={}, b={}",
                    l.name(x),
                    l.name(y)
                )));
            }
            if (g.arrow.apply(x, y) == y) != l.leq(a.comp(x), y) {
                return Err(ResiduationError::InvariantFailed(format!(
                    "`a -> b = b iff a' <= b` fails at a={}, b={}",
                    l.name(x),
                    l.name(y)
                )));
            }
        }
    }
    Ok(g)
}

/// Converse direction: a left residuated l-groupoid satisfying
/// `(x -> 0) -> 0 = x`, `x (.) y = (x \/ (y -> 0)) /\ y` and
/// `x -> y = (x -> 0) \/ (x /\ y)` induces, via `x' := x -> 0`, an algebra
/// that is weakly and dually weakly orthomodular with double negation.
/// Groupoids that fail the identities are classified as such.
pub fn verify_converse(g: &LGroupoid) -> Result<CheckReport, ResiduationError> {
    let laws = is_left_residuated_lgroupoid(&g.prod, &g.arrow)?;
    require(
        laws.holds,
        &format!("not a left residuated l-groupoid: {}", laws.detail),
    )?;
    let l = g.lattice();
    let bottom = l.bottom().expect("groupoid lattices are bounded");
    let arrow = &g.arrow;
    let prod = &g.prod;

    let identities = [
        check_identity(l, "converse", "(x -> 0) -> 0 = x", &["x"], |v| {
            (arrow.apply(arrow.apply(v[0], bottom), bottom), v[0])
        }),
        check_identity(
            l,
            "converse",
            "x * y = (x \\/ (y -> 0)) /\\ y",
            &["x", "y"],
            |v| {
                let (x, y) = (v[0], v[1]);
                (prod.apply(x, y), l.meet(l.join(x, arrow.apply(y, bottom)), y))
            },
        ),
        check_identity(
            l,
            "converse",
            "x -> y = (x -> 0) \\/ (x /\\ y)",
            &["x", "y"],
            |v| {
                let (x, y) = (v[0], v[1]);
                (arrow.apply(x, y), l.join(arrow.apply(x, bottom), l.meet(x, y)))
            },
        ),
    ];
    for r in identities {
        if !r.holds {
            return Ok(r);
        }
    }

    let comp: Vec<usize> = l.elements().map(|x| arrow.apply(x, bottom)).collect();
    let derived = UnaryAlgebra::new(l.clone(), comp).expect("table entries are elements");
    let wom = derived.is_weakly_orthomodular();
    let dwom = derived.is_dually_weakly_orthomodular();
    let dnl = derived.satisfies_double_negation();
    for r in [&wom, &dwom, &dnl] {
        if !r.holds {
            return Ok(CheckReport::fail(
                "converse",
                r.witness.clone().unwrap(),
                format!(
                    "identities hold but derived x' := x -> 0 breaks {}: {}",
                    r.property, r.detail
                ),
            ));
        }
    }
    Ok(CheckReport::pass(
        "converse",
        format!(
            "identities hold; derived x' := x -> 0 is weakly and dually weakly orthomodular with double negation (product associative: {})",
            g.product_is_associative()
        ),
    ))
}

/// Complement table recovered by the converse construction.
pub fn derived_complement(g: &LGroupoid) -> Result<UnaryAlgebra, ResiduationError> {
    let l = g.lattice();
    let bottom = l.bottom().ok_or(ResiduationError::NoBounds)?;
    let comp: Vec<usize> = l.elements().map(|x| g.arrow.apply(x, bottom)).collect();
    Ok(UnaryAlgebra::new(l.clone(), comp).expect("table entries are elements"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;

    #[test]
    fn sasaki_product_spot_values_on_fig2() {
        let a = fixture("FIG2").unwrap();
        let l = a.lattice().clone();
        let prod = sasaki_product(&a);
        let id = |s: &str| l.element(s).unwrap();
        // a (.) f = (a \/ c) /\ f = e /\ f = a
        assert_eq!(prod.apply(id("a"), id("f")), id("a"));
        // e (.) f = (e \/ c) /\ f = e /\ f = a
        assert_eq!(prod.apply(id("e"), id("f")), id("a"));
        // top' = bottom, so x (.) 1 = x
        let top = l.top().unwrap();
        for x in l.elements() {
            assert_eq!(prod.apply(x, top), x);
        }
    }

    #[test]
    fn half_adjunction_on_fixtures() {
        for name in ["M3B", "FIG2"] {
            let a = fixture(name).unwrap();
            let r = check_half_adjunction(&a).unwrap();
            assert!(r.holds, "{name}: {}", r.detail);
        }
        let c2 = Arc::new(FiniteLattice::from_covers(&["0", "1"], &[("0", "1")]).unwrap());
        let not_dwom = UnaryAlgebra::new(c2, vec![1, 1]).unwrap();
        assert!(matches!(
            check_half_adjunction(&not_dwom),
            Err(ResiduationError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn weak_dnl_residuation_on_fixtures() {
        for name in ["M3B", "FIG2", "B4"] {
            let a = fixture(name).unwrap();
            let r = check_weak_dnl_residuation(&a).unwrap();
            assert!(r.holds, "{name}: {}", r.detail);
        }
    }

    #[test]
    fn build_lgroupoid_on_fig2() {
        let a = fixture("FIG2").unwrap();
        let l = a.lattice().clone();
        let g = build_lgroupoid(&a).unwrap();
        let id = |s: &str| l.element(s).unwrap();
        // a (.) f = a and a <= f agree
        assert_eq!(g.prod().apply(id("a"), id("f")), id("a"));
        assert!(l.leq(id("a"), id("f")));
        // a -> b = g != b and a' = g not<= b agree
        assert_eq!(g.arrow().apply(id("a"), id("b")), id("g"));
        assert!(!l.leq(a.comp(id("a")), id("b")));
        assert!(is_left_residuated_lgroupoid(g.prod(), g.arrow()).unwrap().holds);
    }

    #[test]
    fn build_lgroupoid_rejects_m3b() {
        // M3B lacks double negation
        let a = fixture("M3B").unwrap();
        assert!(matches!(
            build_lgroupoid(&a),
            Err(ResiduationError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn swapped_roles_fail_adjointness_on_fig2() {
        let a = fixture("FIG2").unwrap();
        let g = build_lgroupoid(&a).unwrap();
        let r = is_left_residuated_lgroupoid(g.arrow(), g.prod()).unwrap();
        assert!(!r.holds);
        assert!(r.witness.is_some());
    }

    #[test]
    fn singleton_is_lgroupoid() {
        let l = Arc::new(FiniteLattice::from_covers(&["e"], &[] as &[(&str, &str)]).unwrap());
        let a = UnaryAlgebra::new(l, vec![0]).unwrap();
        let g = build_lgroupoid(&a).unwrap();
        assert!(is_left_residuated_lgroupoid(g.prod(), g.arrow()).unwrap().holds);
    }

    #[test]
    fn converse_recovers_fixture_tables() {
        for name in ["FIG2", "B4", "B8"] {
            let a = fixture(name).unwrap();
            let g = build_lgroupoid(&a).unwrap();
            let r = verify_converse(&g).unwrap();
            assert!(r.holds, "{name}: {}", r.detail);
            let derived = derived_complement(&g).unwrap();
            assert_eq!(derived.comp_table(), a.comp_table(), "{name}");
        }
    }

    #[test]
    fn boolean_product_is_meet_hence_associative() {
        let b8 = fixture("B8").unwrap();
        let g = build_lgroupoid(&b8).unwrap();
        assert!(g.product_is_associative());
        let l = b8.lattice();
        for x in l.elements() {
            for y in l.elements() {
                assert_eq!(g.prod().apply(x, y), l.meet(x, y));
            }
        }
    }
}
