//! Independent reference implementations working directly on labeled PD text.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, VecDeque};

use stuckknot::{LaurentPoly, Var};

#[derive(Clone, Debug)]
pub struct PdCrossing {
    pub stuck: bool,
    pub arcs: [u32; 4],
    /// Slot (1 or 3) where the over-strand enters.
    pub over_in: usize,
}

#[derive(Clone, Debug)]
pub struct Pd {
    pub crossings: Vec<PdCrossing>,
    pub loops: usize,
}

impl Pd {
    pub fn parse(text: &str) -> Pd {
        let mut raw = Vec::new();
        let mut loops = 0;
        let cleaned: String = text.lines().map(|l| l.split('#').next().unwrap()).collect::<Vec<_>>().join(" ");
        for tok in cleaned.split(|c: char| c.is_whitespace() || c == ';').filter(|t| !t.is_empty()) {
            if tok == "O" {
                loops += 1;
                continue;
            }
            let stuck = tok.starts_with('S');
            let inner = &tok[2..tok.len() - 1];
            let v: Vec<u32> = inner.split(',').map(|x| x.trim().parse().unwrap()).collect();
            raw.push((stuck, [v[0], v[1], v[2], v[3]]));
        }
        // incoming[(crossing, slot)]; slot 0 in, slot 2 out, 1 xor 3 in
        let mut occ: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
        for (c, (_, a)) in raw.iter().enumerate() {
            for (s, &l) in a.iter().enumerate() {
                occ.entry(l).or_default().push((c, s));
            }
        }
        let mut dir: Vec<Option<bool>> = vec![None; raw.len()]; // Some(true): over enters at 1
        let mut queue = VecDeque::new();
        let incoming = |dir: &Vec<Option<bool>>, c: usize, s: usize| -> Option<bool> {
            match s {
                0 => Some(true),
                2 => Some(false),
                1 => dir[c],
                _ => dir[c].map(|x| !x),
            }
        };
        let settle = |dir: &mut Vec<Option<bool>>, queue: &mut VecDeque<usize>, c: usize, s: usize, inc: bool| {
            if s % 2 == 1 && dir[c].is_none() {
                dir[c] = Some(if s == 1 { inc } else { !inc });
                queue.push_back(c);
            }
        };
        for c in 0..raw.len() {
            queue.push_back(c);
        }
        loop {
            while let Some(c) = queue.pop_front() {
                for s in 0..4 {
                    let Some(inc) = incoming(&dir, c, s) else { continue };
                    let l = raw[c].1[s];
                    for &(c2, s2) in &occ[&l] {
                        if (c2, s2) != (c, s) {
                            settle(&mut dir, &mut queue, c2, s2, !inc);
                        }
                    }
                }
            }
            let Some(c) = (0..raw.len()).find(|&c| dir[c].is_none()) else { break };
            let a = raw[c].1;
            dir[c] = Some(a[1] >= a[3]);
            queue.push_back(c);
        }
        let crossings = raw
            .into_iter()
            .zip(dir)
            .map(|((stuck, arcs), d)| PdCrossing { stuck, arcs, over_in: if d.unwrap() { 1 } else { 3 } })
            .collect();
        Pd { crossings, loops }
    }

    /// Replaces label `from` by `to`; equal labels close a free loop.
    fn merge(&mut self, to: u32, from: u32) {
        if to == from {
            self.loops += 1;
            return;
        }
        for c in &mut self.crossings {
            for l in &mut c.arcs {
                if *l == from {
                    *l = to;
                }
            }
        }
    }

    /// Removes crossing `i`, joining its slots pairwise.
    fn join(&self, i: usize, pairs: [(usize, usize); 2]) -> Pd {
        let mut p = self.clone();
        let x = p.crossings.remove(i);
        let mut labels = x.arcs;
        for (s1, s2) in pairs {
            let (a, b) = (labels[s1], labels[s2]);
            p.merge(a, b);
            for l in &mut labels {
                if *l == b {
                    *l = a;
                }
            }
        }
        p
    }

    pub fn sign(&self, i: usize) -> i32 {
        if self.crossings[i].over_in == 1 {
            1
        } else {
            -1
        }
    }

    fn smooth(&self, i: usize) -> Pd {
        let o = self.crossings[i].over_in;
        self.join(i, [(0, 4 - o), (o, 2)])
    }

    fn switch(&self, i: usize) -> Pd {
        let mut p = self.clone();
        let x = &mut p.crossings[i];
        let [a, b, c, d] = x.arcs;
        if x.over_in == 1 {
            x.arcs = [b, c, d, a];
            x.over_in = 3;
        } else {
            x.arcs = [d, a, b, c];
            x.over_in = 1;
        }
        p
    }

    fn components(&self) -> usize {
        let mut labels: Vec<u32> = self.crossings.iter().flat_map(|c| c.arcs).collect();
        labels.sort_unstable();
        labels.dedup();
        let mut seen = std::collections::HashSet::new();
        let mut count = 0;
        for &l in &labels {
            if seen.contains(&l) {
                continue;
            }
            count += 1;
            let mut cur = l;
            while seen.insert(cur) {
                cur = self.next_label(cur);
            }
        }
        count + self.loops
    }

    /// The incoming occurrence of arc `l`.
    fn head(&self, l: u32) -> (usize, usize) {
        for (i, c) in self.crossings.iter().enumerate() {
            for s in 0..4 {
                let inc = s == 0 || s == c.over_in;
                if c.arcs[s] == l && inc {
                    return (i, s);
                }
            }
        }
        panic!("arc {l} has no head");
    }

    fn next_label(&self, l: u32) -> u32 {
        let (i, s) = self.head(l);
        self.crossings[i].arcs[(s + 2) % 4]
    }

    /// First crossing reached from below, walking components from their
    /// smallest label in increasing order.
    fn ascending(&self) -> Option<usize> {
        let mut labels: Vec<u32> = self.crossings.iter().flat_map(|c| c.arcs).collect();
        labels.sort_unstable();
        labels.dedup();
        let mut seen_arc = std::collections::HashSet::new();
        let mut seen_x = vec![false; self.crossings.len()];
        for &base in &labels {
            if seen_arc.contains(&base) {
                continue;
            }
            let mut cur = base;
            while seen_arc.insert(cur) {
                let (i, s) = self.head(cur);
                if !seen_x[i] {
                    seen_x[i] = true;
                    if s == 0 {
                        return Some(i);
                    }
                }
                cur = self.crossings[i].arcs[(s + 2) % 4];
            }
        }
        None
    }
}

fn v(x: Var, e: i32) -> LaurentPoly {
    LaurentPoly::var_pow(x, e)
}

fn unlink(n: usize) -> LaurentPoly {
    let f = (v(Var::a, 1) - v(Var::a, -1)) * v(Var::z, -1);
    let mut p = LaurentPoly::one();
    for _ in 1..n {
        p = p * f.clone();
    }
    p
}

/// Full skein-tree expansion without memoization. Stuck crossings are
/// eliminated from the last one backwards.
pub fn homflypt_oracle(pd: &Pd) -> LaurentPoly {
    if let Some(i) = (0..pd.crossings.len()).rev().find(|&i| pd.crossings[i].stuck) {
        let mut un = pd.clone();
        un.crossings[i].stuck = false;
        return v(Var::t, 1) * homflypt_oracle(&pd.smooth(i)) + v(Var::r, pd.sign(i)) * homflypt_oracle(&un);
    }
    match pd.ascending() {
        None => unlink(pd.components()),
        Some(i) => {
            let sw = homflypt_oracle(&pd.switch(i));
            let sm = homflypt_oracle(&pd.smooth(i));
            if pd.sign(i) > 0 {
                v(Var::a, -2) * sw + v(Var::a, -1) * v(Var::z, 1) * sm
            } else {
                v(Var::a, 2) * sw - v(Var::a, 1) * v(Var::z, 1) * sm
            }
        }
    }
}

/// Polynomial in `A` and `R` as exponent pairs.
pub type AR = BTreeMap<(i32, i32), i64>;

fn ar_mul(x: &AR, y: &AR) -> AR {
    let mut out = AR::new();
    for (&(a1, r1), &c1) in x {
        for (&(a2, r2), &c2) in y {
            *out.entry((a1 + a2, r1 + r2)).or_default() += c1 * c2;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn ar_add(mut x: AR, y: &AR) -> AR {
    for (&k, &c) in y {
        *x.entry(k).or_default() += c;
    }
    x.retain(|_, c| *c != 0);
    x
}

fn ar_mono(a: i32, r: i32) -> AR {
    AR::from([((a, r), 1)])
}

fn find(parent: &mut HashMap<u32, u32>, x: u32) -> u32 {
    let p = *parent.entry(x).or_insert(x);
    if p == x {
        return x;
    }
    let r = find(parent, p);
    parent.insert(x, r);
    r
}

fn loops_after(pd: &Pd, unions: &[(u32, u32)]) -> usize {
    let mut parent = HashMap::new();
    for c in &pd.crossings {
        for &l in &c.arcs {
            find(&mut parent, l);
        }
    }
    for &(x, y) in unions {
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
        parent.insert(rx, ry);
    }
    let labels: Vec<u32> = parent.keys().copied().collect();
    let mut roots: Vec<u32> = labels.into_iter().map(|l| find(&mut parent, l)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len() + pd.loops
}

fn bracket_rec(pd: &Pd, i: usize, classical_only: bool, unions: &mut Vec<(u32, u32)>, a_exp: i32, out: &mut AR) {
    if i == pd.crossings.len() {
        let delta = AR::from([((2, 0), -1), ((-2, 0), -1)]);
        let r = if classical_only { 0 } else { pd.crossings.iter().filter(|c| c.stuck).count() as i32 };
        let mut term = ar_mono(a_exp, r);
        for _ in 1..loops_after(pd, unions) {
            term = ar_mul(&term, &delta);
        }
        *out = ar_add(std::mem::take(out), &term);
        return;
    }
    let [a, b, c, d] = pd.crossings[i].arcs;
    if pd.crossings[i].stuck && !classical_only {
        unions.extend([(a, b), (b, c), (c, d)]);
        bracket_rec(pd, i + 1, classical_only, unions, a_exp, out);
        unions.truncate(unions.len() - 3);
        return;
    }
    for (pairs, e) in [([(a, d), (b, c)], 1), ([(a, b), (c, d)], -1)] {
        unions.extend(pairs);
        bracket_rec(pd, i + 1, classical_only, unions, a_exp + e, out);
        unions.truncate(unions.len() - 2);
    }
}

/// Recursive bracket over labeled arcs: the A-smoothing joins arcs at slots
/// 0–3 and 1–2, the B-smoothing 0–1 and 2–3, and a stuck crossing fuses all
/// four into one vertex weighted by `R`. With `classical_only`, stuck
/// crossings are smoothed too (the classical Kauffman bracket).
pub fn bracket_oracle(pd: &Pd, classical_only: bool) -> AR {
    let mut out = AR::new();
    bracket_rec(pd, 0, classical_only, &mut Vec::new(), 0, &mut out);
    out
}

pub fn to_ar(p: &LaurentPoly) -> AR {
    let mut out = AR::new();
    for (e, c) in p.terms() {
        let c: i64 = c.try_into().expect("small coefficients");
        out.insert((e.get(Var::A), e.get(Var::R)), c);
    }
    out
}
