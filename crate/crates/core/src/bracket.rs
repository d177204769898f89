//! The stuck bracket: a Kauffman-type state sum where classical crossings are
//! smoothed and stuck crossings stay as rigid 4-valent vertices.

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;

use crate::diagram::StuckDiagram;
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};

pub const DEFAULT_STATE_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Smoothing {
    A,
    B,
}

impl Smoothing {
    /// Slot pairs joined by this smoothing. The A pairing is the one giving
    /// the positive curl `X[1,2,2,1]` the bracket `-A^3`.
    pub fn pairs(self) -> [(usize, usize); 2] {
        match self {
            Smoothing::A => [(0, 3), (1, 2)],
            Smoothing::B => [(0, 1), (2, 3)],
        }
    }
}

/// A fully resolved diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct State {
    pub choices: Vec<Smoothing>,
    pub alpha: usize,
    pub beta: usize,
    /// Number of rigid vertices; always the stuck count of the diagram.
    pub nu: usize,
    /// Connected components of the resolved graph, free loops included.
    pub components: usize,
}

impl State {
    /// `A^(α−β) R^ν`.
    pub fn weight(&self) -> LaurentPoly {
        LaurentPoly::var_pow(Var::A, self.alpha as i32 - self.beta as i32) * LaurentPoly::var_pow(Var::R, self.nu as i32)
    }
}

#[derive(Debug, Clone)]
pub struct BracketConfig {
    /// Largest number of classical crossings enumerated (2^cap states).
    pub cap: usize,
    /// Split enumeration across the rayon pool.
    pub parallel: bool,
}

impl Default for BracketConfig {
    fn default() -> Self {
        BracketConfig { cap: DEFAULT_STATE_CAP, parallel: true }
    }
}

fn components_for(d: &StuckDiagram, classical: &[usize], choose: impl Fn(usize) -> Smoothing) -> usize {
    let n = d.crossing_count();
    let mut uf = UnionFind::<usize>::new(4 * n);
    for (c, row) in d.links().iter().enumerate() {
        for (s, p) in row.iter().enumerate() {
            uf.union(4 * c + s, 4 * p.crossing + p.slot);
        }
    }
    for (i, &c) in classical.iter().enumerate() {
        for (x, y) in choose(i).pairs() {
            uf.union(4 * c + x, 4 * c + y);
        }
    }
    for c in d.stuck_crossings() {
        for s in 1..4 {
            uf.union(4 * c, 4 * c + s);
        }
    }
    let roots = (0..4 * n).filter(|&i| uf.find(i) == i).count();
    roots + d.free_loops()
}

/// Resolves every classical crossing (in index order) by `choices`.
pub fn resolve_state(d: &StuckDiagram, choices: &[Smoothing]) -> Result<State> {
    let classical = d.classical_crossings();
    if choices.len() != classical.len() {
        return Err(Error::ChoiceArityMismatch { expected: classical.len(), got: choices.len() });
    }
    let alpha = choices.iter().filter(|s| **s == Smoothing::A).count();
    Ok(State {
        choices: choices.to_vec(),
        alpha,
        beta: choices.len() - alpha,
        nu: d.stuck_count(),
        components: components_for(d, &classical, |i| choices[i]),
    })
}

pub fn stuck_bracket(d: &StuckDiagram) -> Result<LaurentPoly> {
    stuck_bracket_with(d, &BracketConfig::default())
}

/// `Σ_s A^(α−β) R^ν δ^(|s|−1)` over all states, `δ = −A² − A⁻²`.
pub fn stuck_bracket_with(d: &StuckDiagram, cfg: &BracketConfig) -> Result<LaurentPoly> {
    if d.component_count() == 0 {
        return Err(Error::EmptyDiagram);
    }
    let classical = d.classical_crossings();
    let k = classical.len();
    if k > cfg.cap || k >= 64 {
        return Err(Error::CapExceeded { crossings: k, cap: cfg.cap });
    }

    // histogram over (α−β, |s|)
    let tally = |range: std::ops::Range<u64>| {
        let mut h: HashMap<(i32, usize), u64> = HashMap::new();
        for mask in range {
            let comps = components_for(d, &classical, |i| {
                if mask >> i & 1 == 0 {
                    Smoothing::A
                } else {
                    Smoothing::B
                }
            });
            let b = mask.count_ones() as i32;
            *h.entry((k as i32 - 2 * b, comps)).or_default() += 1;
        }
        h
    };
    let total = 1u64 << k;
    let hist = if cfg.parallel && k >= 12 {
        let chunk = 1u64 << (k - 6);
        (0..total / chunk)
            .into_par_iter()
            .map(|i| tally(i * chunk..(i + 1) * chunk))
            .reduce(HashMap::new, |mut a, b| {
                for (key, v) in b {
                    *a.entry(key).or_default() += v;
                }
                a
            })
    } else {
        tally(0..total)
    };

    let delta = LaurentPoly::delta();
    let mut delta_pow: HashMap<usize, LaurentPoly> = HashMap::new();
    let mut sum = LaurentPoly::zero();
    let mut keys: Vec<_> = hist.into_iter().collect();
    keys.sort_unstable();
    for ((a_exp, comps), count) in keys {
        let dp = delta_pow
            .entry(comps)
            .or_insert_with(|| delta.pow(comps as i32 - 1).expect("δ^n for n ≥ 0"));
        let term = LaurentPoly::from_term(count, crate::laurent::Exponents::of(Var::A, a_exp));
        sum += &term * dp;
    }
    Ok(sum * LaurentPoly::var_pow(Var::R, d.stuck_count() as i32))
}

/// `(−A³)^(−w(D)) ⟨D⟩_R` with the writhe over classical crossings.
pub fn normalized_bracket(d: &StuckDiagram) -> Result<LaurentPoly> {
    normalized_bracket_with(d, &BracketConfig::default())
}

pub fn normalized_bracket_with(d: &StuckDiagram, cfg: &BracketConfig) -> Result<LaurentPoly> {
    let raw = stuck_bracket_with(d, cfg)?;
    Ok(writhe_factor(d.writhe()) * raw)
}

/// `(−A³)^(−w)`.
pub fn writhe_factor(w: i32) -> LaurentPoly {
    let sign = if w % 2 == 0 { 1 } else { -1 };
    LaurentPoly::from_term(sign, crate::laurent::Exponents::of(Var::A, -3 * w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> StuckDiagram {
        StuckDiagram::parse(s).unwrap()
    }

    fn a(e: i32) -> LaurentPoly {
        LaurentPoly::var_pow(Var::A, e)
    }

    #[test]
    fn resolve_examples() {
        assert_eq!(resolve_state(&d("O"), &[]).unwrap().components, 1);
        let rig = resolve_state(&d("S[1,2,2,1]"), &[]).unwrap();
        assert_eq!((rig.components, rig.nu), (1, 1));
        let curl = d("X[1,2,2,1]");
        assert_eq!(resolve_state(&curl, &[Smoothing::A]).unwrap().components, 2);
        assert_eq!(resolve_state(&curl, &[Smoothing::B]).unwrap().components, 1);
        assert_eq!(
            resolve_state(&curl, &[]),
            Err(Error::ChoiceArityMismatch { expected: 1, got: 0 })
        );
    }

    #[test]
    fn curl_calibrates_the_a_smoothing() {
        assert_eq!(stuck_bracket(&d("X[1,2,2,1]")).unwrap(), -a(3));
        assert_eq!(stuck_bracket(&d("X[1,1,2,2]")).unwrap(), -a(-3));
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(stuck_bracket(&d("O")).unwrap(), LaurentPoly::one());
        assert_eq!(stuck_bracket(&d("S[1,2,2,1]")).unwrap(), LaurentPoly::var(Var::R));
        assert_eq!(stuck_bracket(&d("O O")).unwrap(), LaurentPoly::delta());
        assert_eq!(stuck_bracket(&StuckDiagram::unlink(0)), Err(Error::EmptyDiagram));
    }

    #[test]
    fn normalized_examples() {
        assert_eq!(normalized_bracket(&d("X[1,2,2,1]")).unwrap(), LaurentPoly::one());
        assert_eq!(normalized_bracket(&d("X[1,1,2,2]")).unwrap(), LaurentPoly::one());
        assert_eq!(normalized_bracket(&d("S[1,2,2,1]")).unwrap(), LaurentPoly::var(Var::R));
    }

    #[test]
    fn trefoil_bracket() {
        // ⟨right trefoil⟩ = A^-7 - A^-3 - A^5; with writhe 3 the normalized
        // value is -A^-16 + A^-12 + A^-4.
        let t = d("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
        let raw = stuck_bracket(&t).unwrap();
        let hand = &(&a(-7) - &a(-3)) - &a(5);
        assert_eq!(raw, hand);
        let norm = normalized_bracket(&t).unwrap();
        assert_eq!(norm, &(&(-a(-16)) + &a(-12)) + &a(-4));
    }

    #[test]
    fn cap_is_enforced() {
        let t = d("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
        let cfg = BracketConfig { cap: 2, parallel: false };
        assert_eq!(stuck_bracket_with(&t, &cfg), Err(Error::CapExceeded { crossings: 3, cap: 2 }));
    }

    #[test]
    fn parallel_matches_serial() {
        let t = d("X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]");
        let big = t.disjoint_union(&t).disjoint_union(&t);
        let par = stuck_bracket_with(&big, &BracketConfig { cap: 24, parallel: true }).unwrap();
        let ser = stuck_bracket_with(&big, &BracketConfig { cap: 24, parallel: false }).unwrap();
        assert_eq!(par, ser);
    }
}
