//! Lattices expanded with operation tables, plus the structural predicates
//! that classify them: weak and dual weak orthomodularity, double negation,
//! complementation, orthocomplementation, de Morgan laws, antitonicity and
//! the orthomodular law itself.
//!
//! Laws are never type invariants here. An operation table is just a total
//! table; every law is a predicate returning a [`CheckReport`] whose witness
//! is the first violating assignment in lexicographic id order, so reports
//! are stable across runs.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::lattice::FiniteLattice;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operation table is not total: {0}")]
    InvalidTable(String),
    #[error("lattice has no bottom or no top")]
    Unbounded,
}

/// Role marker for a binary operation table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OpTag {
    Implication,
    Product,
    Other,
}

/// A lattice with a total unary operation `'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnaryAlgebra {
    lattice: Arc<FiniteLattice>,
    comp: Vec<usize>,
}

/// A lattice with a total binary operation (an implication candidate, a
/// product, or anything else).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryOpTable {
    lattice: Arc<FiniteLattice>,
    op: Vec<usize>,
    tag: OpTag,
}

/// Outcome of a single property check. `witness` is present exactly when
/// the property fails; re-evaluating the property at the witness reproduces
/// the violation, and `detail` spells the violated instance out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub property: String,
    pub holds: bool,
    pub witness: Option<Vec<(String, String)>>,
    pub detail: String,
}

impl CheckReport {
    pub fn pass(property: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckReport {
            property: property.into(),
            holds: true,
            witness: None,
            detail: detail.into(),
        }
    }

    pub fn fail(
        property: impl Into<String>,
        witness: Vec<(String, String)>,
        detail: impl Into<String>,
    ) -> Self {
        CheckReport {
            property: property.into(),
            holds: false,
            witness: Some(witness),
            detail: detail.into(),
        }
    }

    /// Renames the property, keeping outcome, witness and detail.
    pub fn named(mut self, property: impl Into<String>) -> Self {
        self.property = property.into();
        self
    }
}

/// Exhaustive check of an identity in `vars.len()` variables over a
/// lattice; `sides` maps an assignment to the two evaluated sides. The
/// witness is the first failing assignment in lexicographic id order.
pub(crate) fn check_identity(
    l: &FiniteLattice,
    property: &str,
    formula: &str,
    vars: &[&str],
    sides: impl Fn(&[usize]) -> (usize, usize),
) -> CheckReport {
    let n = l.size();
    let mut vals = vec![0usize; vars.len()];
    loop {
        let (lhs, rhs) = sides(&vals);
        if lhs != rhs {
            let at = vars
                .iter()
                .zip(&vals)
                .map(|(v, &e)| format!("{v}={}", l.name(e)))
                .collect::<Vec<_>>()
                .join(", ");
            return CheckReport::fail(
                property,
                l.label_assignment(vars, &vals),
                format!(
                    "identity `{formula}` violated at {at}: lhs={}, rhs={}",
                    l.name(lhs),
                    l.name(rhs)
                ),
            );
        }
        let mut i = vals.len();
        loop {
            if i == 0 {
                return CheckReport::pass(
                    property,
                    format!("identity `{formula}` holds for all assignments"),
                );
            }
            i -= 1;
            vals[i] += 1;
            if vals[i] < n {
                break;
            }
            vals[i] = 0;
        }
    }
}

/// All unary tables on `n` elements in lexicographic order.
pub(crate) fn all_unary_tables(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (n as u64).pow(n as u32);
    (0..total).map(move |k| {
        (0..n)
            .map(|i| ((k / (n as u64).pow((n - 1 - i) as u32)) % n as u64) as usize)
            .collect()
    })
}

fn check_table(n: usize, table: &[usize], expected_len: usize) -> Result<(), AlgebraError> {
    if table.len() != expected_len {
        return Err(AlgebraError::InvalidTable(format!(
            "expected {expected_len} entries, got {}",
            table.len()
        )));
    }
    if let Some(&bad) = table.iter().find(|&&v| v >= n) {
        return Err(AlgebraError::InvalidTable(format!(
            "entry {bad} is not an element id below {n}"
        )));
    }
    Ok(())
}

impl BinaryOpTable {
    pub fn new(
        lattice: Arc<FiniteLattice>,
        op: Vec<usize>,
        tag: OpTag,
    ) -> Result<Self, AlgebraError> {
        check_table(lattice.size(), &op, lattice.size() * lattice.size())?;
        Ok(BinaryOpTable { lattice, op, tag })
    }

    /// Builds the table from a function over element pairs.
    pub fn from_fn(
        lattice: Arc<FiniteLattice>,
        tag: OpTag,
        f: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let n = lattice.size();
        let mut op = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                op.push(f(x, y));
            }
        }
        BinaryOpTable { lattice, op, tag }
    }

    pub fn lattice(&self) -> &Arc<FiniteLattice> {
        &self.lattice
    }

    pub fn tag(&self) -> OpTag {
        self.tag
    }

    pub fn apply(&self, x: usize, y: usize) -> usize {
        self.op[x * self.lattice.size() + y]
    }

    pub fn entries(&self) -> &[usize] {
        &self.op
    }
}

impl UnaryAlgebra {
    pub fn new(lattice: Arc<FiniteLattice>, comp: Vec<usize>) -> Result<Self, AlgebraError> {
        check_table(lattice.size(), &comp, lattice.size())?;
        Ok(UnaryAlgebra { lattice, comp })
    }

    pub fn lattice(&self) -> &Arc<FiniteLattice> {
        &self.lattice
    }

    pub fn comp(&self, x: usize) -> usize {
        self.comp[x]
    }

    pub fn comp_table(&self) -> &[usize] {
        &self.comp
    }

    fn name(&self, x: usize) -> &str {
        self.lattice.name(x)
    }

    /// Exhaustive check of a two-variable identity; the witness is the
    /// first failing `(x, y)` in lexicographic id order.
    fn check_identity2(
        &self,
        property: &str,
        formula: &str,
        sides: impl Fn(usize, usize) -> (usize, usize),
    ) -> CheckReport {
        for x in self.lattice.elements() {
            for y in self.lattice.elements() {
                let (lhs, rhs) = sides(x, y);
                if lhs != rhs {
                    return CheckReport::fail(
                        property,
                        self.lattice.label_assignment(&["x", "y"], &[x, y]),
                        format!(
                            "identity `{formula}` violated at x={}, y={}: lhs={}, rhs={}",
                            self.name(x),
                            self.name(y),
                            self.name(lhs),
                            self.name(rhs)
                        ),
                    );
                }
            }
        }
        CheckReport::pass(property, format!("identity `{formula}` holds for all assignments"))
    }

    fn check_identity1(
        &self,
        property: &str,
        formula: &str,
        sides: impl Fn(usize) -> (usize, usize),
    ) -> CheckReport {
        for x in self.lattice.elements() {
            let (lhs, rhs) = sides(x);
            if lhs != rhs {
                return CheckReport::fail(
                    property,
                    self.lattice.label_assignment(&["x"], &[x]),
                    format!(
                        "identity `{formula}` violated at x={}: lhs={}, rhs={}",
                        self.name(x),
                        self.name(lhs),
                        self.name(rhs)
                    ),
               );
            }
        }
        CheckReport::pass(property, format!("identity `{formula}` holds for all assignments"))
    }

    /// `(x /\ y) \/ (x /\ (x /\ y)') = x`
    pub fn is_weakly_orthomodular(&self) -> CheckReport {
        let l = &self.lattice;
        self.check_identity2("wom", "(x /\\ y) \\/ (x /\\ (x /\\ y)') = x", |x, y| {
            let m = l.meet(x, y);
            (l.join(m, l.meet(x, self.comp[m])), x)
        })
    }

    /// `(x \/ y) /\ (x \/ (x \/ y)') = x`
    pub fn is_dually_weakly_orthomodular(&self) -> CheckReport {
        let l = &self.lattice;
        self.check_identity2("dwom", "(x \\/ y) /\\ (x \\/ (x \\/ y)') = x", |x, y| {
            let j = l.join(x, y);
            (l.meet(j, l.join(x, self.comp[j])), x)
        })
    }

    /// Double negation law `(x')' = x`.
    pub fn satisfies_double_negation(&self) -> CheckReport {
        self.check_identity1("dnl", "(x')' = x", |x| (self.comp[self.comp[x]], x))
    }

    /// Weak double negation law `((x')')' = x'`.
    pub fn satisfies_weak_double_negation(&self) -> CheckReport {
        self.check_identity1("wdnl", "((x')')' = x'", |x| {
            (self.comp[self.comp[self.comp[x]]], self.comp[x])
        })
    }

    /// Same identity as the double negation law, under its order-theoretic
    /// name.
    pub fn is_involution(&self) -> CheckReport {
        self.satisfies_double_negation().named("involution")
    }

    /// `x \/ x' = 1` and `x /\ x' = 0` on a bounded lattice.
    pub fn is_complementation(&self) -> Result<CheckReport, AlgebraError> {
        let l = &self.lattice;
        let (bottom, top) = match (l.bottom(), l.top()) {
            (Some(b), Some(t)) => (b, t),
            _ => return Err(AlgebraError::Unbounded),
        };
        let joins = self.check_identity1("comp", "x \\/ x' = 1", |x| {
            (l.join(x, self.comp[x]), top)
        });
        if !joins.holds {
            return Ok(joins);
        }
        Ok(self
            .check_identity1("comp", "x /\\ x' = 0", |x| (l.meet(x, self.comp[x]), bottom)))
    }

    /// `x <= y` implies `y' <= x'`.
    pub fn is_antitone(&self) -> CheckReport {
        let l = &self.lattice;
        for x in l.elements() {
            for y in l.elements() {
                if l.leq(x, y) && !l.leq(self.comp[y], self.comp[x]) {
                    return CheckReport::fail(
                        "antitone",
                        l.label_assignment(&["x", "y"], &[x, y]),
                        format!(
                            "x <= y but y' is not below x': {} <= {} yet {}' = {} is not below {} = {}'",
                            self.name(x),
                            self.name(y),
                            self.name(y),
                            self.name(self.comp[y]),
                            self.name(self.comp[x]),
                            self.name(x)
                        ),
                    );
                }
            }
        }
        CheckReport::pass("antitone", "x <= y implies y' <= x' for all comparable pairs")
    }

    /// Both de Morgan laws: `(x \/ y)' = x' /\ y'` and `(x /\ y)' = x' \/ y'`.
    pub fn satisfies_de_morgan(&self) -> CheckReport {
        let l = &self.lattice;
        let join_law = self.check_identity2("demorgan", "(x \\/ y)' = x' /\\ y'", |x, y| {
            (self.comp[l.join(x, y)], l.meet(self.comp[x], self.comp[y]))
        });
        if !join_law.holds {
            return join_law;
        }
        self.check_identity2("demorgan", "(x /\\ y)' = x' \\/ y'", |x, y| {
            (self.comp[l.meet(x, y)], l.join(self.comp[x], self.comp[y]))
        })
    }

    /// Complementation + double negation + antitonicity + de Morgan laws.
    ///
    /// Antitonicity follows from the other clauses whenever they all hold,
    /// so including it never changes the verdict; it is checked before the
    /// de Morgan laws so that a non-monotone `'` is reported as such.
    pub fn is_orthocomplementation(&self) -> Result<CheckReport, AlgebraError> {
        let clauses = [
            self.is_complementation()?,
            self.satisfies_double_negation(),
            self.is_antitone(),
            self.satisfies_de_morgan(),
        ];
        for clause in clauses {
            if !clause.holds {
                let detail = format!("{} clause failed: {}", clause.property, clause.detail);
                return Ok(CheckReport::fail("ortho", clause.witness.unwrap(), detail));
            }
        }
        Ok(CheckReport::pass(
            "ortho",
            "complementation, double negation, antitonicity and de Morgan laws all hold",
        ))
    }

    /// Orthocomplementation plus the orthomodular law in identity form.
    pub fn is_orthomodular(&self) -> Result<CheckReport, AlgebraError> {
        let ortho = self.is_orthocomplementation()?;
        if !ortho.holds {
            return Ok(ortho.named("om"));
        }
        let wom = self.is_weakly_orthomodular();
        if !wom.holds {
            let detail = format!("orthomodular law failed: {}", wom.detail);
            return Ok(CheckReport::fail("om", wom.witness.unwrap(), detail));
        }
        Ok(CheckReport::pass(
            "om",
            "orthocomplementation and the orthomodular law both hold",
        ))
    }

    /// Executable form of the boundedness lemma: a weakly orthomodular
    /// algebra has a top with `x \/ x' = 1` (and `0' = 1` when a bottom
    /// exists); dually for a dually weakly orthomodular algebra. Vacuously
    /// true when neither property holds.
    pub fn check_lemma_bounds(&self) -> CheckReport {
        let l = &self.lattice;
        let mut clauses: Vec<String> = Vec::new();
        if self.is_weakly_orthomodular().holds {
            let top = match l.top() {
                Some(t) => t,
                None => {
                    return CheckReport::fail(
                        "lemma-bounds",
                        vec![],
                        "weakly orthomodular but no greatest element exists".to_string(),
                    )
                }
            };
            let r = self.check_identity1("lemma-bounds", "x \\/ x' = 1", |x| {
                (l.join(x, self.comp[x]), top)
            });
            if !r.holds {
                return r;
            }
            clauses.push("wom: top exists and x \\/ x' = 1".to_string());
            if let Some(bottom) = l.bottom() {
                if self.comp[bottom] != top {
                    return CheckReport::fail(
                        "lemma-bounds",
                        l.label_assignment(&["x"], &[bottom]),
                        format!(
                            "wom algebra with bottom must satisfy 0' = 1, got 0' = {}",
                            self.name(self.comp[bottom])
                        ),
                    );
                }
                clauses.push("wom: 0' = 1".to_string());
            }
        }
        if self.is_dually_weakly_orthomodular().holds {
            let bottom = match l.bottom() {
                Some(b) => b,
                None => {
                    return CheckReport::fail(
                        "lemma-bounds",
                        vec![],
                        "dually weakly orthomodular but no smallest element exists".to_string(),
                    )
                }
            };
            let r = self.check_identity1("lemma-bounds", "x /\\ x' = 0", |x| {
                (l.meet(x, self.comp[x]), bottom)
            });
            if !r.holds {
                return r;
            }
            clauses.push("dwom: bottom exists and x /\\ x' = 0".to_string());
            if let Some(top) = l.top() {
                if self.comp[top] != bottom {
                    return CheckReport::fail(
                        "lemma-bounds",
                        l.label_assignment(&["x"], &[top]),
                        format!(
                            "dwom algebra with top must satisfy 1' = 0, got 1' = {}",
                            self.name(self.comp[top])
                        ),
                    );
                }
                clauses.push("dwom: 1' = 0".to_string());
            }
        }
        if clauses.is_empty() {
            CheckReport::pass(
                "lemma-bounds",
                "vacuously true: neither weakly nor dually weakly orthomodular",
            )
        } else {
            CheckReport::pass("lemma-bounds", clauses.join("; "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;

    fn c2_with(comp: [usize; 2]) -> UnaryAlgebra {
        let l = Arc::new(
            FiniteLattice::from_covers(&["0", "1"], &[("0", "1")]).unwrap(),
        );
        UnaryAlgebra::new(l, comp.to_vec()).unwrap()
    }

    #[test]
    fn fig2_is_wom_and_dwom() {
        let a = fixture("FIG2").unwrap();
        assert!(a.is_weakly_orthomodular().holds);
        assert!(a.is_dually_weakly_orthomodular().holds);
    }

    #[test]
    fn m3b_is_wom_and_dwom() {
        let a = fixture("M3B").unwrap();
        assert!(a.is_weakly_orthomodular().holds);
        assert!(a.is_dually_weakly_orthomodular().holds);
    }

    #[test]
    fn c2_constant_zero_comp_fails_wom_at_x1_y0() {
        let a = c2_with([0, 0]);
        let r = a.is_weakly_orthomodular();
        assert!(!r.holds);
        assert_eq!(
            r.witness.unwrap(),
            vec![("x".to_string(), "1".to_string()), ("y".to_string(), "0".to_string())]
        );
    }

    #[test]
    fn c2_constant_one_comp_fails_dwom_at_x0_y1() {
        let a = c2_with([1, 1]);
        let r = a.is_dually_weakly_orthomodular();
        assert!(!r.holds);
        assert_eq!(
            r.witness.unwrap(),
            vec![("x".to_string(), "0".to_string()), ("y".to_string(), "1".to_string())]
        );
    }

    #[test]
    fn fig2_satisfies_dnl_m3b_does_not() {
        let fig2 = fixture("FIG2").unwrap();
        assert!(fig2.satisfies_double_negation().holds);

        let m3b = fixture("M3B").unwrap();
        let r = m3b.satisfies_double_negation();
        assert!(!r.holds);
        // (a')' = b' = c != a
        assert_eq!(r.witness.unwrap(), vec![("x".to_string(), "a".to_string())]);
        assert!(m3b.satisfies_weak_double_negation().holds);
        assert!(!m3b.is_involution().holds);
    }

    #[test]
    fn complementation_checks() {
        let m3a = fixture("M3A").unwrap();
        assert!(m3a.is_complementation().unwrap().holds);

        let fig2 = fixture("FIG2").unwrap();
        assert!(fig2.is_complementation().unwrap().holds);

        let a = c2_with([0, 0]);
        let r = a.is_complementation().unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness.unwrap(), vec![("x".to_string(), "0".to_string())]);
    }

    #[test]
    fn fig2_fails_orthomodularity_via_antitone_at_a_f() {
        let fig2 = fixture("FIG2").unwrap();
        let r = fig2.is_orthomodular().unwrap();
        assert!(!r.holds);
        assert_eq!(
            r.witness.unwrap(),
            vec![("x".to_string(), "a".to_string()), ("y".to_string(), "f".to_string())]
        );
        let ant = fig2.is_antitone();
        assert!(!ant.holds);
        assert_eq!(
            ant.witness.unwrap(),
            vec![("x".to_string(), "a".to_string()), ("y".to_string(), "f".to_string())]
        );
    }

    #[test]
    fn b4_is_orthomodular() {
        let b4 = fixture("B4").unwrap();
        assert!(b4.is_orthomodular().unwrap().holds);
        assert!(b4.is_orthocomplementation().unwrap().holds);
        assert!(b4.satisfies_de_morgan().holds);
        assert!(b4.is_antitone().holds);
        assert!(b4.is_involution().holds);
    }

    #[test]
    fn lemma_bounds_on_fixtures() {
        assert!(fixture("FIG2").unwrap().check_lemma_bounds().holds);
        assert!(fixture("M3B").unwrap().check_lemma_bounds().holds);
        // dwom-only table on the two-chain: 0' = 0, 1' = 0
        let a = c2_with([0, 0]);
        assert!(a.is_dually_weakly_orthomodular().holds);
        let r = a.check_lemma_bounds();
        assert!(r.holds, "{}", r.detail);
        assert!(r.detail.contains("1' = 0"));
    }

    #[test]
    fn table_validation() {
        let l = Arc::new(
            FiniteLattice::from_covers(&["0", "1"], &[("0", "1")]).unwrap(),
        );
        assert!(matches!(
            UnaryAlgebra::new(l.clone(), vec![0]),
            Err(AlgebraError::InvalidTable(_))
        ));
        assert!(matches!(
            UnaryAlgebra::new(l.clone(), vec![0, 7]),
            Err(AlgebraError::InvalidTable(_))
        ));
        assert!(matches!(
            BinaryOpTable::new(l, vec![0, 1, 1], OpTag::Other),
            Err(AlgebraError::InvalidTable(_))
        ));
    }
}
