//! Combinatorial presentations of CW-complexes with a single 0-cell.
//!
//! A presentation records how many cells there are in each dimension and
//! how each cell is attached:
//!
//! - a 2-cell by a [`Word`] in the 1-cells (an element of the free group),
//! - a 3-cell by a [`CrossedWord`] in the 2-cells (an element of the free
//!   crossed module on the 2-cell attaching words),
//! - an `n`-cell, `n >= 4`, by a [`ModuleElt`] over the `(n-1)`-cells (an
//!   element of the free module twisted by the fundamental group).
//!
//! Crossed words and module elements are kept as raw term lists. Nothing here
//! decides equality in the free crossed module.

use std::fmt;

use crate::crossed::ValidationReport;
use crate::error::{Error, Result};

/// Sign of a letter or crossed-word term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn from_exp(exp: i64) -> Result<Self> {
        match exp {
            1 => Ok(Sign::Pos),
            -1 => Ok(Sign::Neg),
            _ => Err(Error::InvalidArgument(format!("exponent must be +1 or -1, got {exp}"))),
        }
    }

    pub fn exp(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Letter { gen, sign: Sign::Pos }
    }

    pub fn neg(gen: usize) -> Self {
        Letter { gen, sign: Sign::Neg }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, sign: self.sign.flip() }
    }
}

/// A word in the 1-cells.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from `(gen, ±1)` pairs.
    pub fn from_pairs(pairs: &[(usize, i64)]) -> Result<Self> {
        pairs
            .iter()
            .map(|&(gen, exp)| Ok(Letter { gen, sign: Sign::from_exp(exp)? }))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `u · self · u⁻¹`
    pub fn conjugated_by(&self, u: &Word) -> Word {
        u.concat(self).concat(&u.inverse())
    }

    pub fn free_reduce(&self) -> Word {
        free_reduce(self)
    }

    fn shifted(&self, by: usize) -> Word {
        Word(self.0.iter().map(|l| Letter { gen: l.gen + by, sign: l.sign }).collect())
    }

    fn max_gen(&self) -> Option<usize> {
        self.0.iter().map(|l| l.gen).max()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| match l.sign {
                Sign::Pos => format!("x{}", l.gen),
                Sign::Neg => format!("x{}^-1", l.gen),
            })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// Cancels adjacent inverse pairs until none remain.
pub fn free_reduce(w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in w.letters() {
        match out.last() {
            Some(&top) if top == l.inverse() => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    Word(out)
}

/// One factor `(conj ▷ gen)^{±1}` of a crossed word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrossedTerm {
    pub conj: Word,
    pub gen: usize,
    pub sign: Sign,
}

/// A product of conjugated 2-cell generators.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CrossedWord(pub Vec<CrossedTerm>);

impl CrossedWord {
    pub fn empty() -> Self {
        CrossedWord(Vec::new())
    }

    pub fn terms(&self) -> &[CrossedTerm] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The free-group word `Π conj · attach₂(gen)^{±1} · conj⁻¹`.
    pub fn boundary_word(&self, attach2: &[Word]) -> Word {
        let mut letters = Vec::new();
        for t in &self.0 {
            let r = &attach2[t.gen];
            let r = if t.sign == Sign::Pos { r.clone() } else { r.inverse() };
            letters.extend(r.conjugated_by(&t.conj).0);
        }
        Word(letters)
    }

    fn max_gen(&self) -> Option<usize> {
        self.0.iter().map(|t| t.gen).max()
    }
}

/// One summand `coef · (twist ▷ gen)` of a module element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleTerm {
    pub coef: i64,
    pub twist: Word,
    pub gen: usize,
}

/// An element of the free twisted module on the cells of some dimension `>= 3`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ModuleElt(pub Vec<ModuleTerm>);

impl ModuleElt {
    pub fn zero() -> Self {
        ModuleElt(Vec::new())
    }

    pub fn terms(&self) -> &[ModuleTerm] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn max_gen(&self) -> Option<usize> {
        self.0.iter().map(|t| t.gen).max()
    }
}

/// Attaching data of a single cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Attach<'a> {
    Word(&'a Word),
    Crossed(&'a CrossedWord),
    Module(&'a ModuleElt),
}

impl Attach<'_> {
    /// Largest generator index of the dimension below that this data
    /// references, ignoring conjugating and twisting words.
    pub fn max_gen(&self) -> Option<usize> {
        match self {
            Attach::Word(w) => w.max_gen(),
            Attach::Crossed(c) => c.max_gen(),
            Attach::Module(m) => m.max_gen(),
        }
    }
}

/// A CW-complex with one 0-cell, given by cell counts and attaching data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CWPresentation {
    cells: Vec<usize>,
    attach2: Vec<Word>,
    attach3: Vec<CrossedWord>,
    /// `attach_high[i]` holds the data for the cells of dimension `i + 4`.
    attach_high: Vec<Vec<ModuleElt>>,
    name: Option<String>,
}

impl CWPresentation {
    /// Builds a presentation without validating it.
    ///
    /// `cells[n]` is the number of `n`-cells (so `cells[0]` should be 1).
    /// `attach_high[i]` is the data for dimension `i + 4`. Missing attaching
    /// data for a dimension is an error; use [`validate`](Self::validate) for
    /// the remaining invariants.
    pub fn from_parts(
        cells: Vec<usize>,
        attach2: Vec<Word>,
        attach3: Vec<CrossedWord>,
        attach_high: Vec<Vec<ModuleElt>>,
    ) -> Result<Self> {
        let mut cells = cells;
        while cells.len() > 1 && cells.last() == Some(&0) {
            cells.pop();
        }
        if cells.is_empty() {
            return Err(Error::DimensionMismatch("cell counts must include dimension 0".into()));
        }
        let count = |n: usize| cells.get(n).copied().unwrap_or(0);
        if attach2.len() != count(2) || attach3.len() != count(3) {
            return Err(Error::DimensionMismatch(format!(
                "attaching data for dimensions 2 and 3 has {} and {} entries, cell counts are {} and {}",
                attach2.len(),
                attach3.len(),
                count(2),
                count(3)
            )));
        }
        let mut attach_high = attach_high;
        while attach_high.last().is_some_and(Vec::is_empty) {
            attach_high.pop();
        }
        for n in 4..cells.len().max(attach_high.len() + 4) {
            let got = attach_high.get(n - 4).map_or(0, Vec::len);
            if got != count(n) {
                return Err(Error::DimensionMismatch(format!(
                    "dimension {n} has {} cells but {got} attaching entries",
                    count(n)
                )));
            }
        }
        Ok(CWPresentation { cells, attach2, attach3, attach_high, name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Top dimension with at least one cell.
    pub fn dim(&self) -> usize {
        self.cells.len() - 1
    }

    /// Number of `n`-cells (zero above the top dimension).
    pub fn cell_count(&self, n: usize) -> usize {
        self.cells.get(n).copied().unwrap_or(0)
    }

    pub fn cell_counts(&self) -> &[usize] {
        &self.cells
    }

    pub fn attach2(&self) -> &[Word] {
        &self.attach2
    }

    pub fn attach3(&self) -> &[CrossedWord] {
        &self.attach3
    }

    /// Module-element attaching data for the `n`-cells, `n >= 4`.
    pub fn attach_module(&self, n: usize) -> &[ModuleElt] {
        self.attach_high.get(n - 4).map_or(&[], Vec::as_slice)
    }

    /// Attaching data of the `c`-th `n`-cell, `n >= 2`.
    pub fn attach(&self, n: usize, c: usize) -> Attach<'_> {
        match n {
            2 => Attach::Word(&self.attach2[c]),
            3 => Attach::Crossed(&self.attach3[c]),
            _ => Attach::Module(&self.attach_module(n)[c]),
        }
    }

    /// Checks the single 0-cell, generator ranges and, for every 3-cell, that
    /// the boundary of its crossed word freely reduces to the empty word.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if self.cells[0] != 1 {
            report.push("single-0-cell", 0, vec![self.cells[0]]);
        }
        let l1 = self.cell_count(1);
        let l2 = self.cell_count(2);
        let word_ok = |w: &Word| w.letters().iter().all(|l| l.gen < l1);
        for (c, w) in self.attach2.iter().enumerate() {
            if !word_ok(w) {
                report.push("generator-range", 2, vec![c]);
            }
        }
        let mut ranges_ok = true;
        for (c, cw) in self.attach3.iter().enumerate() {
            if cw.terms().iter().any(|t| t.gen >= l2 || !word_ok(&t.conj)) {
                report.push("generator-range", 3, vec![c]);
                ranges_ok = false;
            }
        }
        for n in 4..=self.dim() {
            let below = self.cell_count(n - 1);
            for (c, m) in self.attach_module(n).iter().enumerate() {
                if m.terms().iter().any(|t| t.gen >= below || !word_ok(&t.twist)) {
                    report.push("generator-range", n, vec![c]);
                }
            }
        }
        if ranges_ok && self.attach2.iter().all(word_ok) {
            for (c, cw) in self.attach3.iter().enumerate() {
                let reduced = cw.boundary_word(&self.attach2).free_reduce();
                if !reduced.is_empty() {
                    let mut witness = vec![c];
                    witness.extend(reduced.letters().iter().map(|l| l.gen));
                    report.push("boundary-of-boundary", 3, witness);
                }
            }
        }
        report
    }

    /// Like [`validate`](Self::validate) but returns an error on failure.
    pub fn validated(self) -> Result<Self> {
        let report = self.validate();
        if report.ok() {
            Ok(self)
        } else {
            Err(Error::InvalidPresentation(report))
        }
    }

    /// Reverses the cell order in every dimension, rewriting the attaching
    /// data to match. The result presents the same complex.
    pub fn reversed(&self) -> CWPresentation {
        let rev = |n: usize, i: usize| self.cell_count(n) - 1 - i;
        let rw = |w: &Word| Word(w.letters().iter().map(|l| Letter { gen: rev(1, l.gen), sign: l.sign }).collect());
        let attach2 = self.attach2.iter().rev().map(rw).collect();
        let attach3 = self
            .attach3
            .iter()
            .rev()
            .map(|cw| {
                CrossedWord(
                    cw.terms()
                        .iter()
                        .map(|t| CrossedTerm { conj: rw(&t.conj), gen: rev(2, t.gen), sign: t.sign })
                        .collect(),
                )
            })
            .collect();
        let attach_high = self
            .attach_high
            .iter()
            .enumerate()
            .map(|(i, elts)| {
                let below = i + 3;
                elts.iter()
                    .rev()
                    .map(|m| {
                        ModuleElt(
                            m.terms()
                                .iter()
                                .map(|t| ModuleTerm { coef: t.coef, twist: rw(&t.twist), gen: rev(below, t.gen) })
                                .collect(),
                        )
                    })
                    .collect()
            })
            .collect();
        CWPresentation {
            cells: self.cells.clone(),
            attach2,
            attach3,
            attach_high,
            name: self.name.clone(),
        }
    }

    /// Adds one `n`-cell with the given attaching data.
    pub fn with_cell(&self, n: usize, attach: OwnedAttach) -> Result<CWPresentation> {
        let mut cells = self.cells.clone();
        if cells.len() <= n {
            cells.resize(n + 1, 0);
        }
        cells[n] += 1;
        let mut attach2 = self.attach2.clone();
        let mut attach3 = self.attach3.clone();
        let mut attach_high = self.attach_high.clone();
        match (n, attach) {
            (1, OwnedAttach::None) => {}
            (2, OwnedAttach::Word(w)) => attach2.push(w),
            (3, OwnedAttach::Crossed(cw)) => attach3.push(cw),
            (n, OwnedAttach::Module(m)) if n >= 4 => {
                if attach_high.len() <= n - 4 {
                    attach_high.resize(n - 3, Vec::new());
                }
                attach_high[n - 4].push(m);
            }
            (n, _) => return Err(Error::InvalidArgument(format!("wrong kind of attaching data for dimension {n}"))),
        }
        CWPresentation::from_parts(cells, attach2, attach3, attach_high)
    }

    /// Replaces the attaching word of 2-cell `c`.
    pub fn with_attach2(&self, c: usize, word: Word) -> CWPresentation {
        let mut p = self.clone();
        p.attach2[c] = word;
        p
    }
}

/// Owned attaching data, used when adding cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OwnedAttach {
    None,
    Word(Word),
    Crossed(CrossedWord),
    Module(ModuleElt),
}

pub fn validate_presentation(p: &CWPresentation) -> ValidationReport {
    p.validate()
}

/// One-point union: cells of `q` come after those of `p` in every dimension.
pub fn wedge(p: &CWPresentation, q: &CWPresentation) -> CWPresentation {
    let dim = p.dim().max(q.dim());
    let mut cells = vec![1];
    cells.extend((1..=dim).map(|n| p.cell_count(n) + q.cell_count(n)));
    let s1 = p.cell_count(1);

    let mut attach2 = p.attach2.clone();
    attach2.extend(q.attach2.iter().map(|w| w.shifted(s1)));

    let s2 = p.cell_count(2);
    let mut attach3 = p.attach3.clone();
    attach3.extend(q.attach3.iter().map(|cw| {
        CrossedWord(
            cw.terms()
                .iter()
                .map(|t| CrossedTerm { conj: t.conj.shifted(s1), gen: t.gen + s2, sign: t.sign })
                .collect(),
        )
    }));

    let mut attach_high = Vec::new();
    for n in 4..=dim {
        let shift = p.cell_count(n - 1);
        let mut elts = p.attach_module(n).to_vec();
        elts.extend(q.attach_module(n).iter().map(|m| {
            ModuleElt(
                m.terms()
                    .iter()
                    .map(|t| ModuleTerm { coef: t.coef, twist: t.twist.shifted(s1), gen: t.gen + shift })
                    .collect(),
            )
        }));
        attach_high.push(elts);
    }
    let name = match (p.name(), q.name()) {
        (Some(a), Some(b)) => Some(format!("{a} v {b}")),
        _ => None,
    };
    let w = CWPresentation::from_parts(cells, attach2, attach3, attach_high).expect("wedge keeps counts consistent");
    match name {
        Some(n) => w.with_name(n),
        None => w,
    }
}

/// Builders for the standard small complexes.
pub mod builders {
    use super::*;

    pub fn point() -> CWPresentation {
        CWPresentation::from_parts(vec![1], vec![], vec![], vec![]).unwrap().with_name("point")
    }

    /// One 0-cell and one `n`-cell with empty attaching data.
    pub fn sphere(n: usize) -> Result<CWPresentation> {
        if n == 0 {
            return Err(Error::InvalidArgument("sphere dimension must be at least 1".into()));
        }
        let mut cells = vec![0; n + 1];
        cells[0] = 1;
        cells[n] = 1;
        let (a2, a3, mut high) = (Vec::new(), Vec::new(), Vec::new());
        let (a2, a3) = match n {
            2 => (vec![Word::empty()], a3),
            3 => (a2, vec![CrossedWord::empty()]),
            _ => (a2, a3),
        };
        if n >= 4 {
            high = vec![Vec::new(); n - 3];
            high[n - 4].push(ModuleElt::zero());
        }
        Ok(CWPresentation::from_parts(cells, a2, a3, high)?.with_name(format!("sphere({n})")))
    }

    /// One `(n-1)`-cell `c` and one `n`-cell attached along `c` once.
    pub fn disk(n: usize) -> Result<CWPresentation> {
        if n < 2 {
            return Err(Error::InvalidArgument("disk dimension must be at least 2".into()));
        }
        let rim = sphere(n - 1)?;
        let fill = match n {
            2 => OwnedAttach::Word(Word(vec![Letter::pos(0)])),
            3 => OwnedAttach::Crossed(CrossedWord(vec![CrossedTerm { conj: Word::empty(), gen: 0, sign: Sign::Pos }])),
            _ => OwnedAttach::Module(ModuleElt(vec![ModuleTerm { coef: 1, twist: Word::empty(), gen: 0 }])),
        };
        Ok(rim.with_cell(n, fill)?.with_name(format!("disk({n})")))
    }

    /// Closed orientable surface of genus `g`; genus 0 is `sphere(2)`.
    pub fn genus_surface(g: usize) -> CWPresentation {
        let mut letters = Vec::with_capacity(4 * g);
        for i in 0..g {
            let (a, b) = (2 * i, 2 * i + 1);
            letters.extend([Letter::pos(a), Letter::pos(b), Letter::neg(a), Letter::neg(b)]);
        }
        CWPresentation::from_parts(vec![1, 2 * g, 1], vec![Word(letters)], vec![], vec![])
            .unwrap()
            .with_name(format!("genus_surface({g})"))
    }

    /// Two 1-cells `a, b` and one 2-cell along `a b a⁻¹ b⁻¹`.
    pub fn torus() -> CWPresentation {
        genus_surface(1).with_name("torus")
    }

    /// One 1-cell `x` and one 2-cell along `x x`.
    pub fn rp2() -> CWPresentation {
        CWPresentation::from_parts(vec![1, 1, 1], vec![Word(vec![Letter::pos(0), Letter::pos(0)])], vec![], vec![])
            .unwrap()
            .with_name("rp2")
    }

    /// `S²` as two hemispheres on a circle `x`: 2-cells along `x` and `x⁻¹`.
    pub fn sphere2_two_cells() -> CWPresentation {
        CWPresentation::from_parts(
            vec![1, 1, 2],
            vec![Word(vec![Letter::pos(0)]), Word(vec![Letter::neg(0)])],
            vec![],
            vec![],
        )
        .unwrap()
        .with_name("sphere2_two_cells")
    }

    /// Every builtin by name, as listed by the CLI.
    pub fn library() -> Vec<CWPresentation> {
        let mut all = vec![point()];
        all.extend((1..=4).map(|n| sphere(n).unwrap()));
        all.extend((2..=4).map(|n| disk(n).unwrap()));
        all.push(torus());
        all.push(genus_surface(2));
        all.push(rp2());
        all.push(sphere2_two_cells());
        all
    }

    /// Looks up a builtin such as `torus`, `sphere(3)` or `genus_surface(2)`.
    pub fn by_name(name: &str) -> Option<CWPresentation> {
        let name = name.trim();
        let arg = |prefix: &str| -> Option<usize> {
            name.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?.trim().parse().ok()
        };
        match name {
            "point" => Some(point()),
            "torus" => Some(torus()),
            "rp2" => Some(rp2()),
            "sphere2_two_cells" => Some(sphere2_two_cells()),
            _ => {
                if let Some(n) = arg("sphere") {
                    sphere(n).ok()
                } else if let Some(n) = arg("disk") {
                    disk(n).ok()
                } else {
                    arg("genus_surface").map(genus_surface)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::builders::*;
    use super::*;
    use proptest::prelude::*;

    fn w(pairs: &[(usize, i64)]) -> Word {
        Word::from_pairs(pairs).unwrap()
    }

    #[test]
    fn free_reduction_examples() {
        assert_eq!(free_reduce(&w(&[(0, 1), (0, -1)])), Word::empty());
        assert_eq!(free_reduce(&w(&[(0, 1), (1, 1), (1, -1), (0, 1)])), w(&[(0, 1), (0, 1)]));
        assert_eq!(free_reduce(&Word::empty()), Word::empty());
        assert_eq!(free_reduce(&w(&[(0, 1), (1, 1), (1, -1), (0, -1), (2, 1)])), w(&[(2, 1)]));
    }

    #[test]
    fn builder_cell_counts() {
        assert_eq!(disk(2).unwrap().cell_counts(), &[1, 1, 1]);
        assert_eq!(disk(3).unwrap().cell_counts(), &[1, 0, 1, 1]);
        assert_eq!(disk(5).unwrap().cell_counts(), &[1, 0, 0, 0, 1, 1]);
        assert_eq!(torus().cell_counts(), &[1, 2, 1]);
        assert_eq!(genus_surface(3).cell_count(1), 6);
        assert_eq!(sphere(4).unwrap().cell_counts(), &[1, 0, 0, 0, 1]);
        assert_eq!(point().cell_counts(), &[1]);
        assert!(sphere(0).is_err());
        assert!(disk(1).is_err());
    }

    #[test]
    fn every_builtin_validates() {
        for p in library() {
            assert!(p.validate().ok(), "{:?}: {}", p.name(), p.validate());
        }
        for n in 1..=7 {
            assert!(sphere(n).unwrap().validate().ok());
        }
        for n in 2..=7 {
            assert!(disk(n).unwrap().validate().ok());
        }
    }

    #[test]
    fn three_cell_over_nontrivial_word_is_rejected() {
        let p = disk(2)
            .unwrap()
            .with_cell(3, OwnedAttach::Crossed(CrossedWord(vec![CrossedTerm { conj: Word::empty(), gen: 0, sign: Sign::Pos }])))
            .unwrap();
        let report = p.validate();
        assert!(report.mentions("boundary-of-boundary"));
    }

    #[test]
    fn generator_ranges_are_checked() {
        let p = CWPresentation::from_parts(vec![1, 1, 1], vec![w(&[(1, 1)])], vec![], vec![]).unwrap();
        assert!(p.validate().mentions("generator-range"));
        let p = CWPresentation::from_parts(vec![2], vec![], vec![], vec![]).unwrap();
        assert!(p.validate().mentions("single-0-cell"));
        assert!(CWPresentation::from_parts(vec![1, 1, 2], vec![w(&[(0, 1)])], vec![], vec![]).is_err());
    }

    #[test]
    fn wedge_counts_and_units() {
        let s = sphere(1).unwrap();
        let ss = wedge(&s, &s);
        assert_eq!(ss.cell_counts(), &[1, 2]);
        let t = torus();
        assert_eq!(wedge(&point(), &t).cell_counts(), t.cell_counts());
        assert_eq!(wedge(&point(), &t).attach2(), t.attach2());
        let tr = wedge(&t, &rp2());
        assert_eq!(tr.attach2()[1], w(&[(2, 1), (2, 1)]));
        assert!(tr.validate().ok());
        let td = wedge(&t, &disk(4).unwrap());
        assert_eq!(td.cell_counts(), &[1, 2, 1, 1, 1]);
        assert!(td.validate().ok());
    }

    #[test]
    fn reversal_keeps_validity() {
        let p = wedge(&wedge(&torus(), &rp2()), &disk(3).unwrap());
        let r = p.reversed();
        assert_eq!(r.cell_counts(), p.cell_counts());
        assert!(r.validate().ok());
        assert_eq!(r.reversed(), p);
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(by_name("sphere(3)").unwrap().cell_counts(), &[1, 0, 0, 1]);
        assert_eq!(by_name("genus_surface(2)").unwrap().cell_count(1), 4);
        assert!(by_name("klein").is_none());
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec((0usize..3, prop::bool::ANY), 0..12).prop_map(|v| {
            Word(v.into_iter().map(|(g, p)| if p { Letter::pos(g) } else { Letter::neg(g) }).collect())
        })
    }

    proptest! {
        #[test]
        fn free_reduce_idempotent_and_shrinking(word in arb_word()) {
            let r = free_reduce(&word);
            prop_assert!(r.len() <= word.len());
            prop_assert_eq!(free_reduce(&r), r.clone());
            prop_assert!(r.letters().windows(2).all(|p| p[0] != p[1].inverse()));
        }

        #[test]
        fn word_times_inverse_reduces_to_empty(word in arb_word()) {
            prop_assert!(free_reduce(&word.concat(&word.inverse())).is_empty());
        }

        #[test]
        fn wedge_is_associative_on_builtins(i in 0usize..12, j in 0usize..12, k in 0usize..12) {
            let lib = library();
            let (a, b, c) = (&lib[i], &lib[j], &lib[k]);
            let left = wedge(&wedge(a, b), c);
            let right = wedge(a, &wedge(b, c));
            prop_assert_eq!(left.cell_counts(), right.cell_counts());
            prop_assert_eq!(left.attach2(), right.attach2());
            prop_assert_eq!(left.attach3(), right.attach3());
            for n in 4..=left.dim() {
                prop_assert_eq!(left.attach_module(n), right.attach_module(n));
            }
            for n in 1..=left.dim() {
                prop_assert_eq!(left.cell_count(n), a.cell_count(n) + b.cell_count(n) + c.cell_count(n));
            }
        }
    }
}
