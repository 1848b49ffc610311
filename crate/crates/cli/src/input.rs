//! JSON input documents and `builtin:NAME` references.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::sync::Arc;

use serde::Deserialize;
use sha2::{Digest, Sha256};

use xcomplex::group::{cyclic_group, FiniteGroup, GroupAction, GroupHom};
use xcomplex::presentation::{builders, CrossedTerm, CrossedWord, Letter, ModuleElt, ModuleTerm, Sign, Word};
use xcomplex::{suite, CWPresentation, FiniteCrossedComplex};

/// Malformed input: bad JSON, wrong shape, or an unreadable file.
#[derive(Debug, Clone)]
pub struct ParseError {
    pub source: String,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}: {}", self.source, self.message)
        } else {
            write!(f, "{}:{}:{}: {}", self.source, self.line, self.column, self.message)
        }
    }
}

impl ParseError {
    fn plain(source: &str, message: impl Into<String>) -> Self {
        ParseError { source: source.into(), line: 0, column: 0, message: message.into() }
    }
}

/// Raw bytes of an input together with their digest.
pub struct Input {
    pub origin: String,
    pub text: String,
    pub sha256: String,
}

impl Input {
    pub fn builtin_name(&self) -> Option<&str> {
        self.origin.strip_prefix("builtin:")
    }
}

pub fn read(origin: &str) -> Result<Input, ParseError> {
    let text = if origin.starts_with("builtin:") {
        String::new()
    } else {
        fs::read_to_string(origin).map_err(|e| ParseError::plain(origin, e.to_string()))?
    };
    let bytes = if text.is_empty() { origin.as_bytes() } else { text.as_bytes() };
    let sha256 = hex::encode(Sha256::digest(bytes));
    Ok(Input { origin: origin.into(), text, sha256 })
}

fn parse<T: for<'de> Deserialize<'de>>(input: &Input) -> Result<T, ParseError> {
    serde_json::from_str(&input.text).map_err(|e| ParseError {
        source: input.origin.clone(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
    #[serde(default)]
    pub name: Option<String>,
}

impl GroupDoc {
    pub fn build(&self) -> xcomplex::Result<FiniteGroup> {
        if self.mul.len() != self.order {
            return Err(xcomplex::Error::DimensionMismatch(format!(
                "order is {} but the table has {} rows",
                self.order,
                self.mul.len()
            )));
        }
        let g = FiniteGroup::from_table(&self.mul)?;
        Ok(match &self.name {
            Some(n) => g.with_name(n.clone()),
            None => g,
        })
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDoc {
    #[serde(rename = "L")]
    pub len: usize,
    pub groups: Vec<GroupDoc>,
    pub boundaries: Vec<Vec<usize>>,
    pub actions: Vec<Vec<Vec<usize>>>,
    #[serde(default)]
    pub name: Option<String>,
}

impl ComplexDoc {
    /// Builds the complex without checking the axioms.
    pub fn build_unchecked(&self) -> xcomplex::Result<FiniteCrossedComplex> {
        let mismatch = |what: &str, got: usize, want: usize| {
            xcomplex::Error::DimensionMismatch(format!("L is {} but there are {got} {what} (expected {want})", self.len))
        };
        if self.groups.len() != self.len {
            return Err(mismatch("groups", self.groups.len(), self.len));
        }
        let want = self.len.saturating_sub(1);
        if self.boundaries.len() != want {
            return Err(mismatch("boundaries", self.boundaries.len(), want));
        }
        if self.actions.len() != want {
            return Err(mismatch("actions", self.actions.len(), want));
        }
        let groups = self.groups.iter().map(|g| g.build().map(Arc::new)).collect::<xcomplex::Result<Vec<_>>>()?;
        let mut boundaries = Vec::new();
        let mut actions = Vec::new();
        for i in 0..want {
            boundaries.push(GroupHom::new(groups[i + 1].clone(), groups[i].clone(), self.boundaries[i].clone())?);
            actions.push(GroupAction::new(groups[0].clone(), groups[i + 1].clone(), self.actions[i].clone())?);
        }
        let c = FiniteCrossedComplex::from_parts(groups, boundaries, actions)?;
        Ok(match &self.name {
            Some(n) => c.with_name(n.clone()),
            None => c,
        })
    }
}

type WordDoc = Vec<(usize, i64)>;
type CrossedDoc = Vec<(WordDoc, usize, i64)>;
type ModuleDoc = Vec<(i64, WordDoc, usize)>;

#[derive(Deserialize, Default)]
pub struct AttachDoc {
    #[serde(rename = "2", default)]
    pub two: Vec<WordDoc>,
    #[serde(rename = "3", default)]
    pub three: Vec<CrossedDoc>,
    #[serde(flatten)]
    pub high: BTreeMap<String, Vec<ModuleDoc>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDoc {
    pub cells: Vec<usize>,
    #[serde(default)]
    pub attach: AttachDoc,
    #[serde(default)]
    pub name: Option<String>,
}

fn word(w: &WordDoc) -> xcomplex::Result<Word> {
    let mut letters = Vec::new();
    for &(gen, exp) in w {
        if exp == 0 {
            return Err(xcomplex::Error::InvalidArgument(format!("zero exponent on generator {gen}")));
        }
        let sign = Sign::from_exp(exp.signum())?;
        letters.extend(std::iter::repeat_n(Letter { gen, sign }, exp.unsigned_abs() as usize));
    }
    Ok(Word(letters))
}

impl PresentationDoc {
    /// Dimensions of the higher attaching data, checked for shape.
    fn high_dims(&self, source: &str) -> Result<BTreeMap<usize, &Vec<ModuleDoc>>, ParseError> {
        let mut out = BTreeMap::new();
        for (key, v) in &self.attach.high {
            match key.parse::<usize>() {
                Ok(n) if n >= 4 => {
                    out.insert(n, v);
                }
                _ => return Err(ParseError::plain(source, format!("attach key {key:?} is not a dimension >= 2"))),
            }
        }
        Ok(out)
    }

    pub fn build_unchecked(&self, source: &str) -> Result<Built<CWPresentation>, ParseError> {
        let high = self.high_dims(source)?;
        Ok(self.build(&high))
    }

    fn build(&self, high: &BTreeMap<usize, &Vec<ModuleDoc>>) -> Built<CWPresentation> {
        let attach2 = self.attach.two.iter().map(word).collect::<xcomplex::Result<Vec<_>>>()?;
        let mut attach3 = Vec::new();
        for cw in &self.attach.three {
            let mut terms = Vec::new();
            for (u, gen, exp) in cw {
                terms.push(CrossedTerm { conj: word(u)?, gen: *gen, sign: Sign::from_exp(*exp)? });
            }
            attach3.push(CrossedWord(terms));
        }
        let top = high.keys().max().copied().unwrap_or(3);
        let mut attach_high = Vec::new();
        for n in 4..=top {
            let mut elts = Vec::new();
            for m in high.get(&n).map(|v| v.as_slice()).unwrap_or_default() {
                let mut terms = Vec::new();
                for (coef, u, gen) in m {
                    terms.push(ModuleTerm { coef: *coef, twist: word(u)?, gen: *gen });
                }
                elts.push(ModuleElt(terms));
            }
            attach_high.push(elts);
        }
        let p = CWPresentation::from_parts(self.cells.clone(), attach2, attach3, attach_high)?;
        Ok(match &self.name {
            Some(n) => p.with_name(n.clone()),
            None => p,
        })
    }
}

/// A document after parsing: either built, or rejected by a constructor.
pub type Built<T> = xcomplex::Result<T>;

/// A suite member, or `Z/n` for any `n >= 1`.
fn builtin_complex(name: &str) -> Option<FiniteCrossedComplex> {
    suite::by_name(name).or_else(|| {
        let n = name.trim().strip_prefix("Z/")?.parse().ok()?;
        let g = cyclic_group(n).ok()?.with_name(format!("Z/{n}"));
        Some(FiniteCrossedComplex::from_group(g).with_name(format!("Z/{n}")))
    })
}

pub fn group(input: &Input) -> Result<Built<FiniteGroup>, ParseError> {
    if let Some(name) = input.builtin_name() {
        let c = builtin_complex(name)
            .filter(|c| c.len() == 1)
            .ok_or_else(|| ParseError::plain(&input.origin, format!("no builtin group named {name:?}")))?;
        return Ok(Ok(FiniteGroup::clone(c.group(1))));
    }
    Ok(parse::<GroupDoc>(input)?.build())
}

pub fn complex(input: &Input) -> Result<Built<FiniteCrossedComplex>, ParseError> {
    if let Some(name) = input.builtin_name() {
        return builtin_complex(name)
            .map(Ok)
            .ok_or_else(|| ParseError::plain(&input.origin, format!("no builtin complex named {name:?}")));
    }
    Ok(parse::<ComplexDoc>(input)?.build_unchecked())
}

pub fn presentation(input: &Input) -> Result<Built<CWPresentation>, ParseError> {
    if let Some(name) = input.builtin_name() {
        return builders::by_name(name)
            .map(Ok)
            .ok_or_else(|| ParseError::plain(&input.origin, format!("no builtin space named {name:?}")));
    }
    parse::<PresentationDoc>(input)?.build_unchecked(&input.origin)
}
