//! Counting and listing morphisms by layered backtracking.
//!
//! Layer 1 runs over every assignment of `A_1` to the 1-cells. Each later
//! layer `n <= L` draws the value of an `n`-cell from the `∂_n`-fibre over
//! the evaluated attaching data of that cell, so only compatible colourings
//! are ever visited. The `(L+1)`-cells impose kill constraints (their
//! attaching data must evaluate to the identity) and cells above `L+1` are
//! ignored. A cell of dimension `n+1` is checked as soon as the last
//! `n`-cell it references has been coloured.
//!
//! The layer-1 assignment space is cut into contiguous blocks that run in
//! parallel; counts are summed and listings are concatenated in block order,
//! so results never depend on scheduling.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::crossed::FiniteCrossedComplex;
use crate::error::{Error, Result};
use crate::morphism::{eval_word_unchecked, Morphism};
use crate::presentation::{Attach, CWPresentation, Sign};

pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;
pub const DEFAULT_BRUTEFORCE_CAP: u64 = 10_000_000;

const LAYER1_BLOCKS: u64 = 256;

/// Knobs shared by the search entry points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Worker threads; `0` uses the global rayon pool.
    pub threads: usize,
    /// Largest number of morphisms [`enumerate_homs_with`] will materialise.
    pub cap: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { threads: 0, cap: DEFAULT_ENUMERATION_CAP }
    }
}

impl SearchConfig {
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    /// Runs `op` on a pool of the configured size.
    pub fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> R {
        if self.threads == 0 {
            return op();
        }
        match rayon::ThreadPoolBuilder::new().num_threads(self.threads).build() {
            Ok(pool) => pool.install(op),
            Err(_) => op(),
        }
    }
}

/// One term of a crossed word or module element after its conjugating word
/// has been evaluated in `A_1`.
#[derive(Debug, Clone, Copy)]
struct Term {
    gen: usize,
    power: i64,
}

/// Everything about a (presentation, complex) pair that does not depend on
/// the colouring.
pub(crate) struct Plan<'a> {
    p: &'a CWPresentation,
    a: &'a FiniteCrossedComplex,
    len: usize,
    /// `counts[n]`: number of `n`-cells, `n <= L + 1`.
    counts: Vec<usize>,
    /// `fibres[n][t]`: elements of `A_n` with `∂_n = t`.
    fibres: Vec<Vec<Vec<usize>>>,
    /// `triggers[n][i]`: the `(n+1)`-cells whose last referenced `n`-cell is `i`.
    triggers: Vec<Vec<Vec<usize>>>,
    /// `pre[n]`: the `n`-cells that reference no `(n-1)`-cell.
    pre: Vec<Vec<usize>>,
    /// `terms[n][c]`: generator and power of each term of an `n`-cell, `n >= 3`.
    terms: Vec<Vec<Vec<Term>>>,
}

impl<'a> Plan<'a> {
    pub(crate) fn new(p: &'a CWPresentation, a: &'a FiniteCrossedComplex) -> Result<Self> {
        let report = p.validate();
        if !report.ok() {
            return Err(Error::InvalidPresentation(report));
        }
        let report = a.validate();
        if !report.ok() {
            return Err(Error::InvalidComplex(report));
        }
        let len = a.len();
        let counts: Vec<usize> = (0..=len + 1).map(|n| p.cell_count(n)).collect();
        let mut fibres = vec![Vec::new(); len + 1];
        for (n, slot) in fibres.iter_mut().enumerate().skip(2) {
            *slot = a.boundary(n).fibers();
        }
        let mut triggers = vec![Vec::new(); len + 2];
        let mut pre = vec![Vec::new(); len + 2];
        let mut terms = vec![Vec::new(); len + 2];
        for n in 2..=len + 1 {
            if n >= 3 {
                triggers[n - 1] = vec![Vec::new(); counts[n - 1]];
            }
            for c in 0..counts[n] {
                let attach = p.attach(n, c);
                if n >= 3 {
                    match attach.max_gen() {
                        Some(i) => triggers[n - 1][i].push(c),
                        None => pre[n].push(c),
                    }
                }
                terms[n].push(match attach {
                    Attach::Word(_) => Vec::new(),
                    Attach::Crossed(cw) => cw.terms().iter().map(|t| Term { gen: t.gen, power: t.sign.exp() }).collect(),
                    Attach::Module(m) => m.terms().iter().map(|t| Term { gen: t.gen, power: t.coef }).collect(),
                });
            }
        }
        Ok(Plan { p, a, len, counts, fibres, triggers, pre, terms })
    }

    fn layer1_size(&self) -> Option<u64> {
        (self.a.group(1).order() as u64).checked_pow(self.counts[1] as u32)
    }

    /// Conjugating/twisting words of cells of dimension `3..=L+1`, evaluated
    /// under the 1-cell colours.
    fn resolve_actors(&self, f1: &[usize], actors: &mut [Vec<Vec<usize>>]) {
        for (n, row) in actors.iter_mut().enumerate().take(self.len + 2).skip(3) {
            for (c, slot) in row.iter_mut().enumerate() {
                slot.clear();
                match self.p.attach(n, c) {
                    Attach::Crossed(cw) => slot.extend(cw.terms().iter().map(|t| eval_word_unchecked(self.a, f1, &t.conj))),
                    Attach::Module(m) => slot.extend(m.terms().iter().map(|t| eval_word_unchecked(self.a, f1, &t.twist))),
                    Attach::Word(_) => {}
                }
            }
        }
    }
}

/// Receives the completed colourings of a search.
trait Sink {
    fn leaf(&mut self, colours: &[Vec<usize>]);
    /// All colourings that agree with `colours` below the top layer and take
    /// top-layer values from the given independent choices.
    fn product(&mut self, colours: &mut [Vec<usize>], choices: &[&[usize]]);
}

#[derive(Default)]
struct Tally {
    small: u128,
    big: BigUint,
}

impl Tally {
    fn add(&mut self, x: u128) {
        match self.small.checked_add(x) {
            Some(s) => self.small = s,
            None => {
                self.big += BigUint::from(self.small) + BigUint::from(x);
                self.small = 0;
            }
        }
    }

    fn add_big(&mut self, x: BigUint) {
        self.big += x;
    }

    fn total(self) -> BigUint {
        self.big + BigUint::from(self.small)
    }
}

impl Sink for Tally {
    fn leaf(&mut self, _: &[Vec<usize>]) {
        self.add(1);
    }

    fn product(&mut self, _: &mut [Vec<usize>], choices: &[&[usize]]) {
        let mut acc: Option<u128> = Some(1);
        for c in choices {
            acc = acc.and_then(|a| a.checked_mul(c.len() as u128));
        }
        match acc {
            Some(v) => self.add(v),
            None => self.add_big(choices.iter().map(|c| BigUint::from(c.len())).product()),
        }
    }
}

struct Collect {
    out: Vec<Morphism>,
}

impl Sink for Collect {
    fn leaf(&mut self, colours: &[Vec<usize>]) {
        self.out.push(Morphism::new(colours.to_vec()));
    }

    fn product(&mut self, colours: &mut [Vec<usize>], choices: &[&[usize]]) {
        if choices.iter().any(|c| c.is_empty()) {
            return;
        }
        let top = colours.len() - 1;
        let mut idx = vec![0usize; choices.len()];
        loop {
            for (slot, (choice, &i)) in colours[top].iter_mut().zip(choices.iter().zip(&idx)) {
                *slot = choice[i];
            }
            self.out.push(Morphism::new(colours.to_vec()));
            // odometer, last cell fastest
            let mut pos = choices.len();
            loop {
                if pos == 0 {
                    return;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
}

/// Per-worker mutable search state.
struct Worker<'p, 'a> {
    plan: &'p Plan<'a>,
    colours: Vec<Vec<usize>>,
    /// `targets[n][c]`: evaluated attaching data of `n`-cell `c`, `2 <= n <= L`.
    targets: Vec<Vec<usize>>,
    actors: Vec<Vec<Vec<usize>>>,
}

impl<'p, 'a> Worker<'p, 'a> {
    fn new(plan: &'p Plan<'a>) -> Self {
        let colours = (1..=plan.len).map(|n| vec![0; plan.counts[n]]).collect();
        let mut targets = vec![Vec::new(); plan.len + 1];
        for (n, t) in targets.iter_mut().enumerate().skip(2) {
            *t = vec![0; plan.counts[n]];
        }
        let actors = (0..=plan.len + 1)
            .map(|n| if n >= 3 { vec![Vec::new(); plan.counts[n]] } else { Vec::new() })
            .collect();
        Worker { plan, colours, targets, actors }
    }

    fn run_layer1(&mut self, f1: &[usize], sink: &mut impl Sink) {
        let plan = self.plan;
        self.colours[0].copy_from_slice(f1);
        let a = plan.a;
        let len = plan.len;
        for c in 0..plan.counts[2] {
            let w = plan.p.attach2();
            let v = eval_word_unchecked(a, f1, &w[c]);
            if len == 1 {
                if v != 0 {
                    return;
                }
            } else {
                if plan.fibres[2][v].is_empty() {
                    return;
                }
                self.targets[2][c] = v;
            }
        }
        if len == 1 {
            sink.leaf(&self.colours);
            return;
        }
        plan.resolve_actors(f1, &mut self.actors);
        self.enter_layer(2, sink);
    }

    /// Layer `n`'s targets are known; colour its cells.
    fn enter_layer(&mut self, n: usize, sink: &mut impl Sink) {
        let plan = self.plan;
        if n == plan.len && plan.counts[n + 1] == 0 {
            let choices: Vec<&[usize]> = self.targets[n].iter().map(|&t| plan.fibres[n][t].as_slice()).collect();
            sink.product(&mut self.colours, &choices);
            return;
        }
        for &c in &plan.pre[n + 1] {
            if !self.check(n + 1, c) {
                return;
            }
        }
        self.assign(n, 0, sink);
    }

    fn assign(&mut self, n: usize, i: usize, sink: &mut impl Sink) {
        let plan = self.plan;
        if i == plan.counts[n] {
            if n == plan.len {
                sink.leaf(&self.colours);
            } else {
                self.enter_layer(n + 1, sink);
            }
            return;
        }
        let fibre = &plan.fibres[n][self.targets[n][i]];
        'values: for &v in fibre {
            self.colours[n - 1][i] = v;
            for &c in &plan.triggers[n][i] {
                if !self.check(n + 1, c) {
                    continue 'values;
                }
            }
            self.assign(n, i + 1, sink);
        }
    }

    /// Evaluates `m`-cell `c` (`m >= 3`); records its target if `m <= L`
    /// and reports whether the search can continue.
    fn check(&mut self, m: usize, c: usize) -> bool {
        let plan = self.plan;
        let a = plan.a;
        let below = m - 1;
        let g = a.group(below);
        let act = a.action(below);
        let values = &self.colours[below - 1];
        let actors = &self.actors[m][c];
        let mut acc = 0;
        for (t, &x) in plan.terms[m][c].iter().zip(actors) {
            let twisted = act.act(x, values[t.gen]);
            let factor = match t.power {
                1 => twisted,
                -1 => g.inv(twisted),
                k => g.pow(twisted, k),
            };
            acc = g.mul(acc, factor);
        }
        if m <= plan.len {
            self.targets[m][c] = acc;
            !plan.fibres[m][acc].is_empty()
        } else {
            acc == 0
        }
    }
}

fn decode(mut index: u64, radix: usize, digits: &mut [usize]) {
    for d in digits.iter_mut().rev() {
        *d = (index % radix as u64) as usize;
        index /= radix as u64;
    }
}

fn increment(radix: usize, digits: &mut [usize]) {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < radix {
            return;
        }
        *d = 0;
    }
}

fn blocks(total: u64) -> Vec<(u64, u64)> {
    let count = total.clamp(1, LAYER1_BLOCKS);
    (0..count)
        .map(|b| (total * b / count, total * (b + 1) / count))
        .filter(|(s, e)| s < e)
        .collect()
}

fn run_block<S: Sink>(plan: &Plan<'_>, (start, end): (u64, u64), sink: &mut S) {
    let radix = plan.a.group(1).order();
    let mut digits = vec![0; plan.counts[1]];
    decode(start, radix, &mut digits);
    let mut worker = Worker::new(plan);
    for _ in start..end {
        worker.run_layer1(&digits, sink);
        increment(radix, &mut digits);
    }
}

fn layer1_total(plan: &Plan<'_>) -> Result<u64> {
    plan.layer1_size().ok_or_else(|| Error::InstanceTooLarge {
        size: format!("{}^{}", plan.a.group(1).order(), plan.counts[1]),
        cap: u64::MAX,
    })
}

pub(crate) fn count_with_plan(plan: &Plan<'_>) -> Result<BigUint> {
    let total = layer1_total(plan)?;
    Ok(blocks(total)
        .into_par_iter()
        .map(|block| {
            let mut tally = Tally::default();
            run_block(plan, block, &mut tally);
            tally.total()
        })
        .reduce(BigUint::zero, |x, y| x + y))
}

/// Exact number of morphisms from the fundamental crossed complex of `p` to `a`.
pub fn count_homs(p: &CWPresentation, a: &FiniteCrossedComplex) -> Result<BigUint> {
    count_homs_with(p, a, &SearchConfig::default())
}

pub fn count_homs_with(p: &CWPresentation, a: &FiniteCrossedComplex, cfg: &SearchConfig) -> Result<BigUint> {
    let plan = Plan::new(p, a)?;
    cfg.install(|| count_with_plan(&plan))
}

/// Every morphism, in lexicographic order by (dimension, cell, element).
pub fn enumerate_homs(p: &CWPresentation, a: &FiniteCrossedComplex) -> Result<Vec<Morphism>> {
    enumerate_homs_with(p, a, &SearchConfig::default())
}

pub fn enumerate_homs_with(p: &CWPresentation, a: &FiniteCrossedComplex, cfg: &SearchConfig) -> Result<Vec<Morphism>> {
    let plan = Plan::new(p, a)?;
    cfg.install(|| {
        let count = count_with_plan(&plan)?;
        if count > BigUint::from(cfg.cap) {
            return Err(Error::ResultTooLarge { size: count.to_string(), cap: cfg.cap });
        }
        let total = layer1_total(&plan)?;
        let parts: Vec<Vec<Morphism>> = blocks(total)
            .into_par_iter()
            .map(|block| {
                let mut sink = Collect { out: Vec::new() };
                run_block(&plan, block, &mut sink);
                sink.out
            })
            .collect();
        Ok(parts.into_iter().flatten().collect())
    })
}

/// Counts morphisms by testing every colouring of every cell up to
/// dimension `L`. Exponential; refuses instances with more than `cap`
/// colourings.
pub fn count_homs_bruteforce(p: &CWPresentation, a: &FiniteCrossedComplex, cap: u64) -> Result<BigUint> {
    let report = p.validate();
    if !report.ok() {
        return Err(Error::InvalidPresentation(report));
    }
    let len = a.len();
    let mut radices = Vec::new();
    for n in 1..=len {
        radices.extend(std::iter::repeat_n(a.group(n).order(), p.cell_count(n)));
    }
    let size: BigUint = radices.iter().map(|&r| BigUint::from(r)).product();
    if size > BigUint::from(cap) {
        return Err(Error::InstanceTooLarge { size: size.to_string(), cap });
    }
    let size = size.to_u64().expect("bounded by cap");
    let mut digits = vec![0usize; radices.len()];
    let mut colours: Vec<Vec<usize>> = (1..=len).map(|n| vec![0; p.cell_count(n)]).collect();
    let mut count = BigUint::zero();
    for _ in 0..size {
        let mut k = 0;
        for row in colours.iter_mut() {
            for slot in row.iter_mut() {
                *slot = digits[k];
                k += 1;
            }
        }
        if is_morphism(p, a, &colours) {
            count += BigUint::one();
        }
        for (d, &r) in digits.iter_mut().zip(&radices).rev() {
            *d += 1;
            if *d < r {
                break;
            }
            *d = 0;
        }
    }
    Ok(count)
}

/// Direct check of the defining equations, written independently of the
/// search: evaluate every attaching word from scratch.
fn is_morphism(p: &CWPresentation, a: &FiniteCrossedComplex, colours: &[Vec<usize>]) -> bool {
    let len = a.len();
    let g1 = a.group(1);
    let word_value = |w: &crate::presentation::Word| {
        let mut acc = 0;
        for l in w.letters() {
            let x = colours[0][l.gen];
            acc = g1.mul(acc, if l.sign == Sign::Pos { x } else { g1.inv(x) });
        }
        acc
    };
    for n in 2..=len + 1 {
        for c in 0..p.cell_count(n) {
            let value = match p.attach(n, c) {
                Attach::Word(w) => word_value(w),
                Attach::Crossed(cw) => {
                    let g = a.group(2);
                    let mut acc = 0;
                    for t in cw.terms() {
                        let v = a.action(2).act(word_value(&t.conj), colours[1][t.gen]);
                        acc = g.mul(acc, if t.sign == Sign::Pos { v } else { g.inv(v) });
                    }
                    acc
                }
                Attach::Module(m) => {
                    let k = n - 1;
                    let g = a.group(k);
                    let mut acc = 0;
                    for t in m.terms() {
                        let v = a.action(k).act(word_value(&t.twist), colours[k - 1][t.gen]);
                        let mut step = 0;
                        for _ in 0..t.coef.unsigned_abs() {
                            step = g.mul(step, v);
                        }
                        if t.coef < 0 {
                            step = g.inv(step);
                        }
                        acc = g.mul(acc, step);
                    }
                    acc
                }
            };
            let expected = if n <= len { a.boundary(n).apply(colours[n - 1][c]) } else { 0 };
            if value != expected {
                return false;
            }
        }
    }
    true
}
