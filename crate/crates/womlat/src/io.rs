//! File formats: `.lat` lattice files, `.msr` measure files, and DOT
//! export of Hasse diagrams.
//!
//! A `.lat` file is UTF-8 and line-oriented; `#` starts a comment. It holds
//! one lattice plus optional named operation tables:
//!
//! ```text
//! [elements] 0 a b c 1
//! [covers]   0 a ; 0 b ; 0 c ; a 1 ; b 1 ; c 1
//! [unary ']  0:1 a:b b:c c:a 1:0        # optional
//! [binary ->] (a,b):b (a,0):b ...        # optional, must be total
//! [binary *] ...                         # optional, must be total
//! ```
//!
//! A section may continue over following lines until the next `[` header.
//! A `.msr` file holds one `label: p/q` line per element.

use std::sync::Arc;

use num_rational::Rational64;
use thiserror::Error;

use crate::algebra::{BinaryOpTable, OpTag, UnaryAlgebra};
use crate::lattice::{FiniteLattice, LatticeError};
use crate::measures::{GeneralizedMeasure, MeasureError};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `[elements]` section")]
    MissingElements,
    #[error("duplicate section `{0}`")]
    DuplicateSection(String),
    #[error("unknown section `{0}`; expected elements, covers, unary ', binary -> or binary *")]
    UnknownSection(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("`{section}` table is not total: missing entry for {missing}")]
    NotTotal { section: String, missing: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Measure(#[from] MeasureError),
}

/// Parsed contents of a `.lat` file: the lattice plus whichever operation
/// tables the file carried.
#[derive(Debug, Clone)]
pub struct LatFile {
    pub lattice: Arc<FiniteLattice>,
    pub comp: Option<Vec<usize>>,
    pub arrow: Option<Vec<usize>>,
    pub prod: Option<Vec<usize>>,
}

impl LatFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut sections: Vec<(usize, String, String)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('[') {
                let end = rest.find(']').ok_or_else(|| FormatError::Syntax {
                    line: lineno + 1,
                    msg: "unterminated section header".to_string(),
                })?;
                let header = rest[..end].trim().to_string();
                let body = rest[end + 1..].trim().to_string();
                sections.push((lineno + 1, header, body));
            } else if let Some(last) = sections.last_mut() {
                last.2.push(' ');
                last.2.push_str(line);
            } else {
                return Err(FormatError::Syntax {
                    line: lineno + 1,
                    msg: "content before first section header".to_string(),
                });
            }
        }

        let mut elements: Option<(usize, String)> = None;
        let mut covers: Option<(usize, String)> = None;
        let mut unary: Option<(usize, String)> = None;
        let mut arrow: Option<(usize, String)> = None;
        let mut prod: Option<(usize, String)> = None;
        for (line, header, body) in sections {
            let slot = match header.as_str() {
                "elements" => &mut elements,
                "covers" => &mut covers,
                "unary '" => &mut unary,
                "binary ->" => &mut arrow,
                "binary *" => &mut prod,
                other => return Err(FormatError::UnknownSection(other.to_string())),
            };
            if slot.is_some() {
                return Err(FormatError::DuplicateSection(header));
            }
            *slot = Some((line, body));
        }

        let (_, elements) = elements.ok_or(FormatError::MissingElements)?;
        let names: Vec<&str> = elements.split_whitespace().collect();

        let mut cover_pairs: Vec<(String, String)> = Vec::new();
        if let Some((line, body)) = covers {
            for chunk in body.split(';') {
                let parts: Vec<&str> = chunk.split_whitespace().collect();
                match parts.as_slice() {
                    [] => continue,
                    [lo, hi] => cover_pairs.push((lo.to_string(), hi.to_string())),
                    other => {
                        return Err(FormatError::Syntax {
                            line,
                            msg: format!(
                                "cover entry `{}` is not a pair of labels",
                                other.join(" ")
                            ),
                        })
                    }
                }
            }
        }
        let lattice = Arc::new(FiniteLattice::from_covers(&names, &cover_pairs)?);

        let comp = match unary {
            None => None,
            Some((line, body)) => Some(parse_unary_section(&lattice, line, &body)?),
        };
        let arrow = match arrow {
            None => None,
            Some((line, body)) => Some(parse_binary_section(&lattice, "binary ->", line, &body)?),
        };
        let prod = match prod {
            None => None,
            Some((line, body)) => Some(parse_binary_section(&lattice, "binary *", line, &body)?),
        };
        Ok(LatFile { lattice, comp, arrow, prod })
    }

    /// The unary algebra, when the file carries a `[unary ']` table.
    pub fn algebra(&self) -> Option<UnaryAlgebra> {
        self.comp.as_ref().map(|comp| {
            UnaryAlgebra::new(self.lattice.clone(), comp.clone())
                .expect("parsed tables are total")
        })
    }

    pub fn arrow_table(&self) -> Option<BinaryOpTable> {
        self.arrow.as_ref().map(|op| {
            BinaryOpTable::new(self.lattice.clone(), op.clone(), OpTag::Implication)
                .expect("parsed tables are total")
        })
    }

    pub fn prod_table(&self) -> Option<BinaryOpTable> {
        self.prod.as_ref().map(|op| {
            BinaryOpTable::new(self.lattice.clone(), op.clone(), OpTag::Product)
                .expect("parsed tables are total")
        })
    }

    pub fn from_lattice(lattice: Arc<FiniteLattice>) -> Self {
        LatFile { lattice, comp: None, arrow: None, prod: None }
    }

    pub fn from_algebra(algebra: &UnaryAlgebra) -> Self {
        LatFile {
            lattice: algebra.lattice().clone(),
            comp: Some(algebra.comp_table().to_vec()),
            arrow: None,
            prod: None,
        }
    }

    /// Serializes back to `.lat` text.
    pub fn to_text(&self) -> String {
        let l = &self.lattice;
        let mut out = String::new();
        out.push_str("[elements]");
        for name in l.names() {
            out.push(' ');
            out.push_str(name);
        }
        out.push('\n');
        let covers = l.covers();
        if !covers.is_empty() {
            out.push_str("[covers]");
            for (i, &(a, b)) in covers.iter().enumerate() {
                if i > 0 {
                    out.push_str(" ;");
                }
                out.push_str(&format!(" {} {}", l.name(a), l.name(b)));
            }
            out.push('\n');
        }
        if let Some(comp) = &self.comp {
            out.push_str("[unary ']");
            for x in l.elements() {
                out.push_str(&format!(" {}:{}", l.name(x), l.name(comp[x])));
            }
            out.push('\n');
        }
        for (section, table) in [("[binary ->]", &self.arrow), ("[binary *]", &self.prod)] {
            if let Some(op) = table {
                out.push_str(section);
                for x in l.elements() {
                    for y in l.elements() {
                        out.push_str(&format!(
                            " ({},{}):{}",
                            l.name(x),
                            l.name(y),
                            l.name(op[x * l.size() + y])
                        ));
                    }
                }
                out.push('\n');
            }
        }
        out
    }
}

fn lookup(l: &FiniteLattice, label: &str) -> Result<usize, FormatError> {
    l.element(label)
        .ok_or_else(|| FormatError::UnknownLabel(label.to_string()))
}

fn parse_unary_section(
    l: &FiniteLattice,
    line: usize,
    body: &str,
) -> Result<Vec<usize>, FormatError> {
    let mut table: Vec<Option<usize>> = vec![None; l.size()];
    for entry in body.split_whitespace() {
        let (x, cx) = entry.split_once(':').ok_or_else(|| FormatError::Syntax {
            line,
            msg: format!("unary entry `{entry}` is not of the form x:y"),
        })?;
        table[lookup(l, x)?] = Some(lookup(l, cx)?);
    }
    table
        .into_iter()
        .enumerate()
        .map(|(x, v)| {
            v.ok_or_else(|| FormatError::NotTotal {
                section: "unary '".to_string(),
                missing: l.name(x).to_string(),
            })
        })
        .collect()
}

fn parse_binary_section(
    l: &FiniteLattice,
    section: &str,
    line: usize,
    body: &str,
) -> Result<Vec<usize>, FormatError> {
    let n = l.size();
    let mut table: Vec<Option<usize>> = vec![None; n * n];
    for entry in body.split_whitespace() {
        let bad = || FormatError::Syntax {
            line,
            msg: format!("binary entry `{entry}` is not of the form (a,b):c"),
        };
        let rest = entry.strip_prefix('(').ok_or_else(bad)?;
        let (pair, value) = rest.split_once("):").ok_or_else(bad)?;
        let (a, b) = pair.split_once(',').ok_or_else(bad)?;
        table[lookup(l, a.trim())? * n + lookup(l, b.trim())?] = Some(lookup(l, value.trim())?);
    }
    table
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| FormatError::NotTotal {
                section: section.to_string(),
                missing: format!("({},{})", l.name(i / n), l.name(i % n)),
            })
        })
        .collect()
}

/// Parses a `.msr` file: one `label: p/q` line per element (plain integers
/// are accepted for whole values), total over the carrier.
pub fn parse_measure(text: &str, l: &FiniteLattice) -> Result<GeneralizedMeasure, FormatError> {
    let mut values: Vec<Option<Rational64>> = vec![None; l.size()];
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (label, value) = line.split_once(':').ok_or_else(|| FormatError::Syntax {
            line: lineno + 1,
            msg: format!("measure entry `{line}` is not of the form label: p/q"),
        })?;
        let id = lookup(l, label.trim())?;
        let value = value.trim();
        let rational = match value.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| FormatError::Syntax {
                    line: lineno + 1,
                    msg: format!("bad numerator in `{value}`"),
                })?;
                let q: i64 = q.trim().parse().map_err(|_| FormatError::Syntax {
                    line: lineno + 1,
                    msg: format!("bad denominator in `{value}`"),
                })?;
                if q == 0 {
                    return Err(FormatError::Syntax {
                        line: lineno + 1,
                        msg: "denominator must be nonzero".to_string(),
                    });
                }
                Rational64::new(p, q)
            }
            None => {
                let p: i64 = value.parse().map_err(|_| FormatError::Syntax {
                    line: lineno + 1,
                    msg: format!("bad rational `{value}`"),
                })?;
                Rational64::from_integer(p)
            }
        };
        values[id] = Some(rational);
    }
    let values: Vec<Rational64> = values
        .into_iter()
        .enumerate()
        .map(|(x, v)| {
            v.ok_or_else(|| FormatError::NotTotal {
                section: "measure".to_string(),
                missing: l.name(x).to_string(),
            })
        })
        .collect::<Result<_, _>>()?;
    Ok(GeneralizedMeasure::new(l, values)?)
}

/// Serializes a measure as `label: p/q` lines, one per element.
pub fn measure_to_text(s: &GeneralizedMeasure, l: &FiniteLattice) -> String {
    let mut out = String::new();
    for x in l.elements() {
        let v = s.value(x);
        out.push_str(&format!("{}: {}/{}\n", l.name(x), v.numer(), v.denom()));
    }
    out
}

/// Hasse diagram in DOT: one directed edge per cover, drawn bottom-up.
pub fn to_dot(l: &FiniteLattice) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
    for x in l.elements() {
        out.push_str(&format!("  \"{}\";\n", l.name(x)));
    }
    for (a, b) in l.covers() {
        out.push_str(&format!("  \"{}\" -> \"{}\";\n", l.name(a), l.name(b)));
    }
    out.push_str("}\n");
    out
}
