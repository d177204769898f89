//! The rigid HOMFLYPT polynomial `P_R ∈ ℤ[a^±1, z^±1, t, r^±1]`.
//!
//! Stuck crossings are eliminated first with
//! `P(L*±) = t·P(L0) + r^±1·P(L±)`; the remaining classical diagram is
//! reduced by switching crossings until it is descending, using
//! `a·P(L+) − a⁻¹·P(L−) = z·P(L0)`.

use std::collections::HashMap;

use crate::diagram::{CrossingKind, DiagramCode, End, StuckDiagram};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};

pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone)]
pub struct SkeinConfig {
    /// Maximum number of expanded recursion nodes.
    pub budget: usize,
    /// Cache values by canonical code.
    pub memoize: bool,
}

impl Default for SkeinConfig {
    fn default() -> Self {
        SkeinConfig { budget: DEFAULT_NODE_BUDGET, memoize: true }
    }
}

/// One step of the classical reduction.
#[derive(Debug, Clone, PartialEq)]
pub enum Resolution {
    /// The diagram is descending; this is its unlink value.
    Unlink(LaurentPoly),
    /// `value(d) = Σ coeff · value(child)` at the first crossing met from below.
    Skein { crossing: usize, terms: Vec<(LaurentPoly, StuckDiagram)> },
}

fn v(x: Var, e: i32) -> LaurentPoly {
    LaurentPoly::var_pow(x, e)
}

/// Children of the rigid relation at stuck crossing `c`:
/// `[(t, L0), (r^±1, L±)]`.
pub fn eliminate_stuck(d: &StuckDiagram, c: usize) -> Result<Vec<(LaurentPoly, StuckDiagram)>> {
    if d.crossing(c)?.kind != CrossingKind::Stuck {
        return Err(Error::NotStuck(c));
    }
    let sign = d.crossing_sign(c)?;
    Ok(vec![
        (LaurentPoly::var(Var::t), d.smooth_oriented(c)?),
        (v(Var::r, sign), d.stuck_to_classical_crossing(c)?),
    ])
}

/// `((a − a⁻¹)/z)^(n−1)`.
pub fn unlink_value(components: usize) -> LaurentPoly {
    LaurentPoly::unlink_factor()
        .pow(components as i32 - 1)
        .expect("the unlink factor is only raised to powers ≥ 0 here")
}

/// Skein expansion at classical crossing `c`, rearranged to express the
/// diagram through its switch and its smoothing.
pub fn classical_terms(d: &StuckDiagram, c: usize) -> Result<Vec<(LaurentPoly, StuckDiagram)>> {
    let switched = d.switch_crossing(c)?;
    let smoothed = d.smooth_oriented(c)?;
    Ok(if d.crossing_sign(c)? > 0 {
        // P(L+) = a⁻² P(L−) + a⁻¹ z P(L0)
        vec![(v(Var::a, -2), switched), (v(Var::a, -1) * v(Var::z, 1), smoothed)]
    } else {
        // P(L−) = a² P(L+) − a z P(L0)
        vec![(v(Var::a, 2), switched), (-(v(Var::a, 1) * v(Var::z, 1)), smoothed)]
    })
}

/// First crossing whose first visit is on its under-strand, walking each
/// strand cycle from its base point in order.
pub fn first_ascending_crossing(d: &StuckDiagram, bases: &[End]) -> Option<usize> {
    let mut seen = vec![false; d.crossing_count()];
    for &base in bases {
        let mut cur = base;
        loop {
            let h = d.head_of(cur);
            if !seen[h.crossing] {
                seen[h.crossing] = true;
                if !h.is_over() {
                    return Some(h.crossing);
                }
            }
            cur = h.through();
            if cur == base {
                break;
            }
        }
    }
    None
}

/// Where an end of crossing `c` sits after switching `c`.
fn end_after_switch(d: &StuckDiagram, c: usize, e: End) -> End {
    if e.crossing != c {
        return e;
    }
    let shift = if d.crossings()[c].over_enters_at_1 { 3 } else { 1 };
    e.rotated(shift)
}

/// One reduction step of a stuck-free diagram, using canonical base points.
pub fn descending_resolution(d: &StuckDiagram) -> Result<Resolution> {
    descending_with_bases(d, &d.base_points())
}

fn descending_with_bases(d: &StuckDiagram, bases: &[End]) -> Result<Resolution> {
    if d.stuck_count() > 0 {
        return Err(Error::NotClassical(d.stuck_crossings()[0]));
    }
    match first_ascending_crossing(d, bases) {
        None => Ok(Resolution::Unlink(unlink_value(d.component_count()))),
        Some(c) => Ok(Resolution::Skein { crossing: c, terms: classical_terms(d, c)? }),
    }
}

/// Memoizing evaluator; reusable across diagrams.
#[derive(Debug, Default)]
pub struct SkeinEngine {
    cfg: SkeinConfig,
    memo: HashMap<DiagramCode, LaurentPoly>,
    nodes: usize,
}

impl SkeinEngine {
    pub fn new(cfg: SkeinConfig) -> Self {
        SkeinEngine { cfg, memo: HashMap::new(), nodes: 0 }
    }

    /// Nodes expanded since construction.
    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn evaluate(&mut self, d: &StuckDiagram) -> Result<LaurentPoly> {
        if d.component_count() == 0 {
            return Err(Error::EmptyDiagram);
        }
        self.eval(d, None)
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.cfg.budget {
            return Err(Error::BudgetExceeded(self.cfg.budget));
        }
        Ok(())
    }

    /// `bases` carries the traversal through a chain of switches so the
    /// number of ascending crossings strictly drops.
    fn eval(&mut self, d: &StuckDiagram, bases: Option<Vec<End>>) -> Result<LaurentPoly> {
        if d.crossing_count() == 0 {
            return Ok(unlink_value(d.free_loops()));
        }
        let key = self.cfg.memoize.then(|| d.canonical_code());
        if let Some(hit) = key.as_ref().and_then(|k| self.memo.get(k)) {
            return Ok(hit.clone());
        }
        self.tick()?;
        let value = if let Some(&c) = d.stuck_crossings().first() {
            let mut sum = LaurentPoly::zero();
            for (coeff, child) in eliminate_stuck(d, c)? {
                sum += coeff * self.eval(&child, None)?;
            }
            sum
        } else {
            let bases = bases.unwrap_or_else(|| d.base_points());
            match descending_with_bases(d, &bases)? {
                Resolution::Unlink(val) => val,
                Resolution::Skein { crossing, terms } => {
                    let mut it = terms.into_iter();
                    let (c_sw, switched) = it.next().expect("switch term");
                    let (c_sm, smoothed) = it.next().expect("smoothing term");
                    let moved: Vec<End> = bases.iter().map(|&e| end_after_switch(d, crossing, e)).collect();
                    c_sw * self.eval(&switched, Some(moved))? + c_sm * self.eval(&smoothed, None)?
                }
            }
        };
        if let Some(k) = key {
            self.memo.insert(k, value.clone());
        }
        Ok(value)
    }
}

pub fn rigid_homflypt(d: &StuckDiagram) -> Result<LaurentPoly> {
    rigid_homflypt_with(d, &SkeinConfig::default())
}

pub fn rigid_homflypt_with(d: &StuckDiagram, cfg: &SkeinConfig) -> Result<LaurentPoly> {
    SkeinEngine::new(cfg.clone()).evaluate(d)
}
