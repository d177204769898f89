//! Oriented stuck knot diagrams.
//!
//! A diagram is a 4-valent plane graph whose vertices are crossings. Each
//! crossing has four slots in cyclic order, starting at the incoming end of
//! the under-strand: slots 0 and 2 carry the under-strand (in at 0, out at 2),
//! slots 1 and 3 carry the over-strand. Every slot is linked to exactly one
//! other slot; a link is one arc of the diagram. Crossing-free components are
//! kept as a bare count of free loops.

mod code;
mod edit;
mod parse;

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use code::DiagramCode;
pub(crate) use edit::Editor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrossingKind {
    Classical,
    Stuck,
}

impl CrossingKind {
    pub fn letter(self) -> char {
        match self {
            CrossingKind::Classical => 'X',
            CrossingKind::Stuck => 'S',
        }
    }
}

/// One slot of one crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct End {
    pub crossing: usize,
    pub slot: usize,
}

impl End {
    pub fn new(crossing: usize, slot: usize) -> Self {
        End { crossing, slot }
    }

    /// The opposite slot on the same strand.
    pub fn through(self) -> End {
        End::new(self.crossing, (self.slot + 2) % 4)
    }

    /// The next slot in cyclic order around the crossing.
    pub fn rotated(self, k: usize) -> End {
        End::new(self.crossing, (self.slot + k) % 4)
    }

    pub fn is_over(self) -> bool {
        self.slot % 2 == 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub kind: CrossingKind,
    /// The over-strand enters at slot 1 (and leaves at 3) when set, otherwise
    /// it enters at slot 3.
    pub over_enters_at_1: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StuckDiagram {
    crossings: Vec<Crossing>,
    links: Vec<[End; 4]>,
    free_loops: usize,
}

impl StuckDiagram {
    /// The crossing-free diagram with `n` loops.
    pub fn unlink(n: usize) -> Self {
        StuckDiagram { crossings: vec![], links: vec![], free_loops: n }
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// Builds a diagram from raw parts and checks every structural invariant.
    pub fn from_parts(crossings: Vec<Crossing>, links: Vec<[End; 4]>, free_loops: usize) -> Result<Self> {
        let d = StuckDiagram { crossings, links, free_loops };
        d.check_links()?;
        d.check_planar()?;
        Ok(d)
    }

    pub(crate) fn from_parts_unchecked(crossings: Vec<Crossing>, links: Vec<[End; 4]>, free_loops: usize) -> Self {
        let d = StuckDiagram { crossings, links, free_loops };
        debug_assert!(d.check_links().is_ok(), "broken links in {d:?}");
        debug_assert!(d.check_planar().is_ok(), "non-planar result {d:?}");
        d
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, c: usize) -> Result<&Crossing> {
        self.crossings.get(c).ok_or(Error::NoSuchCrossing(c))
    }

    pub fn kind(&self, c: usize) -> CrossingKind {
        self.crossings[c].kind
    }

    pub fn stuck_crossings(&self) -> Vec<usize> {
        (0..self.crossings.len()).filter(|&c| self.kind(c) == CrossingKind::Stuck).collect()
    }

    pub fn classical_crossings(&self) -> Vec<usize> {
        (0..self.crossings.len()).filter(|&c| self.kind(c) == CrossingKind::Classical).collect()
    }

    /// Rigidity level: the number of stuck crossings.
    pub fn stuck_count(&self) -> usize {
        self.crossings.iter().filter(|c| c.kind == CrossingKind::Stuck).count()
    }

    pub fn classical_count(&self) -> usize {
        self.crossing_count() - self.stuck_count()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn partner(&self, e: End) -> End {
        self.links[e.crossing][e.slot]
    }

    pub fn links(&self) -> &[[End; 4]] {
        &self.links
    }

    pub fn is_incoming(&self, e: End) -> bool {
        match e.slot {
            0 => true,
            2 => false,
            1 => self.crossings[e.crossing].over_enters_at_1,
            _ => !self.crossings[e.crossing].over_enters_at_1,
        }
    }

    /// Incoming slot of the over-strand.
    pub fn over_in_slot(&self, c: usize) -> usize {
        if self.crossings[c].over_enters_at_1 {
            1
        } else {
            3
        }
    }

    pub fn over_out_slot(&self, c: usize) -> usize {
        4 - self.over_in_slot(c)
    }

    /// The arc leaving through the outgoing end `out` arrives at this
    /// incoming end.
    pub fn head_of(&self, out: End) -> End {
        debug_assert!(!self.is_incoming(out));
        self.partner(out)
    }

    /// Continues along the knot: from an outgoing end to the next outgoing end.
    pub fn next_out(&self, out: End) -> End {
        self.head_of(out).through()
    }

    /// Every outgoing end; each identifies one arc by its tail.
    pub fn outgoing_ends(&self) -> Vec<End> {
        (0..self.crossings.len())
            .flat_map(|c| (0..4).map(move |s| End::new(c, s)))
            .filter(|e| !self.is_incoming(*e))
            .collect()
    }

    /// Tail (outgoing end) of the arc at `e`.
    pub fn arc_tail(&self, e: End) -> End {
        if self.is_incoming(e) {
            self.partner(e)
        } else {
            e
        }
    }

    /// +1 or −1. Positive when the over-strand enters at slot 1.
    pub fn crossing_sign(&self, c: usize) -> Result<i32> {
        Ok(if self.crossing(c)?.over_enters_at_1 { 1 } else { -1 })
    }

    /// Signed count of classical crossings.
    pub fn writhe(&self) -> i32 {
        self.crossings
            .iter()
            .filter(|c| c.kind == CrossingKind::Classical)
            .map(|c| if c.over_enters_at_1 { 1 } else { -1 })
            .sum()
    }

    /// Strand cycles through crossings, each as its list of outgoing ends in
    /// traversal order. Free loops are not included.
    pub fn strand_cycles(&self) -> Vec<Vec<End>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for start in self.outgoing_ends() {
            if seen.contains(&start) {
                continue;
            }
            let mut cyc = Vec::new();
            let mut e = start;
            loop {
                seen.insert(e);
                cyc.push(e);
                e = self.next_out(e);
                if e == start {
                    break;
                }
            }
            out.push(cyc);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.strand_cycles().len() + self.free_loops
    }

    /// Faces of the plane graph, each as the cyclic list of ends its darts
    /// start from. The face lies to the same side of every dart.
    pub fn faces(&self) -> Vec<Vec<End>> {
        let mut seen = HashSet::new();
        let mut faces = Vec::new();
        for c in 0..self.crossings.len() {
            for s in 0..4 {
                let start = End::new(c, s);
                if seen.contains(&start) {
                    continue;
                }
                let mut face = Vec::new();
                let mut e = start;
                loop {
                    seen.insert(e);
                    face.push(e);
                    e = self.partner(e).rotated(1);
                    if e == start {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Crossing sets of the connected pieces of the plane graph.
    pub fn pieces(&self) -> Vec<Vec<usize>> {
        let n = self.crossings.len();
        let mut piece = vec![usize::MAX; n];
        let mut out = Vec::new();
        for root in 0..n {
            if piece[root] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![root];
            piece[root] = id;
            let mut i = 0;
            while i < members.len() {
                let c = members[i];
                i += 1;
                for e in &self.links[c] {
                    if piece[e.crossing] == usize::MAX {
                        piece[e.crossing] = id;
                        members.push(e.crossing);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    fn check_links(&self) -> Result<()> {
        if self.links.len() != self.crossings.len() {
            return Err(Error::Syntax("crossing/link table size mismatch".into()));
        }
        for c in 0..self.crossings.len() {
            for s in 0..4 {
                let e = End::new(c, s);
                let p = self.partner(e);
                if p.crossing >= self.crossings.len() || p.slot > 3 || self.partner(p) != e || p == e {
                    return Err(Error::Syntax(format!("dangling slot {s} of crossing {c}")));
                }
                if self.is_incoming(e) == self.is_incoming(p) {
                    return Err(Error::Orientation { arc: 0 });
                }
            }
        }
        Ok(())
    }

    /// Euler check on the face-traced rotation system: each connected piece
    /// must satisfy V − E + F = 2.
    fn check_planar(&self) -> Result<()> {
        let v = self.crossings.len() as i64;
        let e = 2 * v;
        let f = self.faces().len() as i64;
        let pieces = self.pieces().len() as i64;
        if v - e + f != 2 * pieces {
            return Err(Error::NonPlanar { euler: v - e + f - 2 * (pieces - 1) });
        }
        Ok(())
    }
}

impl fmt::Display for StuckDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.canonical_code().as_str())
    }
}
