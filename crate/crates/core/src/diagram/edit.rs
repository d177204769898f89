use std::collections::HashSet;

use super::{Crossing, CrossingKind, End, StuckDiagram};
use crate::error::{Error, Result};

/// Mutable scratch copy used by structural edits and local moves.
pub(crate) struct Editor {
    pub crossings: Vec<Crossing>,
    pub links: Vec<[End; 4]>,
    pub free_loops: usize,
}

impl Editor {
    pub fn new(d: &StuckDiagram) -> Self {
        Editor { crossings: d.crossings.clone(), links: d.links.clone(), free_loops: d.free_loops }
    }

    pub fn connect(&mut self, a: End, b: End) {
        self.links[a.crossing][a.slot] = b;
        self.links[b.crossing][b.slot] = a;
    }

    /// Adds a crossing given its four ends in cyclic order as
    /// `(strand, incoming)` pairs, with `under` naming the under-strand.
    /// Returns the slot assigned to each position.
    pub fn add_crossing(&mut self, kind: CrossingKind, ends: [(u8, bool); 4], under: u8) -> [End; 4] {
        let p = (0..4)
            .find(|&i| ends[i] == (under, true))
            .expect("under-strand must have an incoming end");
        debug_assert_eq!(ends[(p + 2) % 4], (under, false));
        let c = self.crossings.len();
        let over_enters_at_1 = ends[(p + 1) % 4].1;
        self.crossings.push(Crossing { kind, over_enters_at_1 });
        let placeholder = End::new(c, 0);
        self.links.push([placeholder; 4]);
        [0, 1, 2, 3].map(|i| End::new(c, (i + 4 - p) % 4))
    }

    pub fn finish(self) -> StuckDiagram {
        StuckDiagram::from_parts_unchecked(self.crossings, self.links, self.free_loops)
    }

    pub fn finish_checked(self) -> Result<StuckDiagram> {
        StuckDiagram::from_parts(self.crossings, self.links, self.free_loops)
    }

    /// Reorders the slots of `c` so new slot `i` is old slot `perm[i]`.
    fn permute_slots(&mut self, c: usize, perm: [usize; 4]) {
        let mut inv = [0; 4];
        for (i, &j) in perm.iter().enumerate() {
            inv[j] = i;
        }
        let old = self.links[c];
        let map = |e: End| if e.crossing == c { End::new(c, inv[e.slot]) } else { e };
        for j in 0..4 {
            let p = map(old[j]);
            self.links[c][inv[j]] = p;
            if p.crossing != c {
                self.links[p.crossing][p.slot] = End::new(c, inv[j]);
            }
        }
    }

    /// Exchanges over and under at `c`, whatever its kind.
    pub fn switch(&mut self, c: usize) {
        if self.crossings[c].over_enters_at_1 {
            self.permute_slots(c, [1, 2, 3, 0]);
            self.crossings[c].over_enters_at_1 = false;
        } else {
            self.permute_slots(c, [3, 0, 1, 2]);
            self.crossings[c].over_enters_at_1 = true;
        }
    }
}

impl StuckDiagram {
    /// Re-kinds every stuck crossing as classical.
    pub fn forget_rigidity(&self) -> StuckDiagram {
        let mut d = self.clone();
        for c in &mut d.crossings {
            c.kind = CrossingKind::Classical;
        }
        d
    }

    /// Marks a classical crossing as stuck; the inverse of [`unstick`](Self::unstick).
    pub fn stick(&self, c: usize) -> Result<StuckDiagram> {
        if self.crossing(c)?.kind == CrossingKind::Stuck {
            return Err(Error::NotClassical(c));
        }
        let mut d = self.clone();
        d.crossings[c].kind = CrossingKind::Stuck;
        Ok(d)
    }

    /// Releases the rigidity at a stuck crossing, keeping over/under.
    pub fn unstick(&self, c: usize) -> Result<StuckDiagram> {
        if self.crossing(c)?.kind != CrossingKind::Stuck {
            return Err(Error::NotStuck(c));
        }
        let mut d = self.clone();
        d.crossings[c].kind = CrossingKind::Classical;
        Ok(d)
    }

    /// The `L±` diagram of a rigid crossing relation; same as [`unstick`](Self::unstick).
    pub fn stuck_to_classical_crossing(&self, c: usize) -> Result<StuckDiagram> {
        self.unstick(c)
    }

    pub fn switch_crossing(&self, c: usize) -> Result<StuckDiagram> {
        if self.crossing(c)?.kind != CrossingKind::Classical {
            return Err(Error::NotClassical(c));
        }
        let mut ed = Editor::new(self);
        ed.switch(c);
        Ok(ed.finish())
    }

    /// Switches every crossing, stuck ones included.
    pub fn mirror(&self) -> StuckDiagram {
        let mut ed = Editor::new(self);
        for c in 0..self.crossings.len() {
            ed.switch(c);
        }
        ed.finish()
    }

    /// Oriented smoothing at `c` (the `L0` of a skein triple).
    pub fn smooth_oriented(&self, c: usize) -> Result<StuckDiagram> {
        self.crossing(c)?;
        Ok(self.remove_crossings(&[c], |d, c| [(0, d.over_out_slot(c)), (d.over_in_slot(c), 2)]))
    }

    /// Deletes crossings while keeping both strands through them.
    pub fn erase_crossings(&self, removed: &[usize]) -> StuckDiagram {
        self.remove_crossings(removed, |d, c| [(0, 2), (d.over_in_slot(c), d.over_out_slot(c))])
    }

    /// Deletes the given crossings, joining each incoming slot to the outgoing
    /// slot `pairs` names. Strands closing up entirely inside the removed set
    /// become free loops.
    pub(crate) fn remove_crossings(
        &self,
        removed: &[usize],
        pairs: impl Fn(&StuckDiagram, usize) -> [(usize, usize); 2],
    ) -> StuckDiagram {
        let gone: HashSet<usize> = removed.iter().copied().collect();
        let through = |e: End| -> End {
            let [(i1, o1), (i2, o2)] = pairs(self, e.crossing);
            debug_assert!(e.slot == i1 || e.slot == i2);
            End::new(e.crossing, if e.slot == i1 { o1 } else { o2 })
        };

        let kept: Vec<usize> = (0..self.crossings.len()).filter(|c| !gone.contains(c)).collect();
        let mut index = vec![usize::MAX; self.crossings.len()];
        for (i, &c) in kept.iter().enumerate() {
            index[c] = i;
        }
        let remap = |e: End| End::new(index[e.crossing], e.slot);

        let mut links: Vec<[End; 4]> = kept.iter().map(|&c| self.links[c].map(remap)).collect();
        let mut used: HashSet<End> = HashSet::new();
        for &c in &kept {
            for s in 0..4 {
                let tail = End::new(c, s);
                if self.is_incoming(tail) || !gone.contains(&self.partner(tail).crossing) {
                    continue;
                }
                let mut cur = self.partner(tail);
                let head = loop {
                    used.insert(cur);
                    let out = through(cur);
                    let nxt = self.partner(out);
                    if !gone.contains(&nxt.crossing) {
                        break nxt;
                    }
                    cur = nxt;
                };
                let (t, h) = (remap(tail), remap(head));
                links[t.crossing][t.slot] = h;
                links[h.crossing][h.slot] = t;
            }
        }

        let mut free_loops = self.free_loops;
        for &c in removed {
            for s in 0..4 {
                let start = End::new(c, s);
                if !self.is_incoming(start) || used.contains(&start) {
                    continue;
                }
                free_loops += 1;
                let mut cur = start;
                loop {
                    used.insert(cur);
                    cur = self.partner(through(cur));
                    if cur == start {
                        break;
                    }
                }
            }
        }

        let crossings = kept.iter().map(|&c| self.crossings[c]).collect();
        StuckDiagram::from_parts_unchecked(crossings, links, free_loops)
    }

    /// Relabeled union of two diagrams.
    pub fn disjoint_union(&self, other: &StuckDiagram) -> StuckDiagram {
        let off = self.crossings.len();
        let mut crossings = self.crossings.clone();
        crossings.extend_from_slice(&other.crossings);
        let mut links = self.links.clone();
        links.extend(other.links.iter().map(|l| l.map(|e| End::new(e.crossing + off, e.slot))));
        StuckDiagram::from_parts_unchecked(crossings, links, self.free_loops + other.free_loops)
    }
}
