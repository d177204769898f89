//! Canonical serialization.
//!
//! Each connected piece is labeled by walking components: the first walk
//! starts at some arc, later walks start at the unlabeled strand of the
//! earliest recorded crossing that still has one. Crossings are emitted in the
//! order they were first recorded. The minimum over all start arcs is the
//! piece's code; pieces are sorted and followed by one `O` per free loop.

use std::collections::HashMap;
use std::fmt;

use super::{End, StuckDiagram};

/// Canonical text of a diagram; equal codes mean equal diagrams up to
/// relabeling of arcs and crossings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramCode(String);

impl DiagramCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for DiagramCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

type Token = (u8, [u32; 4]);

/// A labeling of one piece: emitted crossing order, and arc label per tail end.
pub(crate) struct PieceLabeling {
    pub order: Vec<usize>,
    pub labels: HashMap<End, u32>,
}

impl StuckDiagram {
    fn label_piece_from(&self, start: End) -> PieceLabeling {
        let mut order = Vec::new();
        let mut recorded = HashMap::new();
        let mut labels: HashMap<End, u32> = HashMap::new();
        let mut record = |c: usize, order: &mut Vec<usize>| {
            if let std::collections::hash_map::Entry::Vacant(v) = recorded.entry(c) {
                v.insert(());
                order.push(c);
            }
        };
        let mut next = 1u32;
        let mut walk_start = Some(start);
        while let Some(s) = walk_start {
            record(s.crossing, &mut order);
            let mut cur = s;
            loop {
                labels.insert(cur, next);
                next += 1;
                let inc = self.head_of(cur);
                record(inc.crossing, &mut order);
                cur = inc.through();
                if cur == s {
                    break;
                }
            }
            walk_start = order.iter().find_map(|&c| {
                [2, self.over_out_slot(c)]
                    .into_iter()
                    .map(|slot| End::new(c, slot))
                    .find(|e| !labels.contains_key(e))
            });
        }
        PieceLabeling { order, labels }
    }

    fn tokens(&self, lab: &PieceLabeling) -> Vec<Token> {
        lab.order
            .iter()
            .map(|&c| {
                let kind = self.kind(c) as u8;
                let arcs = [0, 1, 2, 3].map(|s| lab.labels[&self.arc_tail(End::new(c, s))]);
                (kind, arcs)
            })
            .collect()
    }

    /// Minimal labeling of every piece, pieces in canonical order.
    pub(crate) fn canonical_labelings(&self) -> Vec<(PieceLabeling, Vec<Token>)> {
        let mut out: Vec<(PieceLabeling, Vec<Token>)> = self
            .pieces()
            .into_iter()
            .map(|piece| {
                let mut best: Option<(PieceLabeling, Vec<Token>)> = None;
                for &c in &piece {
                    for slot in [2, self.over_out_slot(c)] {
                        let lab = self.label_piece_from(End::new(c, slot));
                        let toks = self.tokens(&lab);
                        if best.as_ref().is_none_or(|(_, b)| toks < *b) {
                            best = Some((lab, toks));
                        }
                    }
                }
                best.expect("pieces are nonempty")
            })
            .collect();
        out.sort_by(|a, b| a.1.cmp(&b.1));
        out
    }

    pub fn canonical_code(&self) -> DiagramCode {
        let mut parts: Vec<String> = Vec::new();
        let mut offset = 0u32;
        for (lab, toks) in self.canonical_labelings() {
            for (kind, arcs) in &toks {
                let letter = if *kind == 0 { 'X' } else { 'S' };
                let a = arcs.map(|x| x + offset);
                parts.push(format!("{letter}[{},{},{},{}]", a[0], a[1], a[2], a[3]));
            }
            offset += lab.labels.len() as u32;
        }
        parts.extend(std::iter::repeat_n("O".to_string(), self.free_loops));
        DiagramCode(parts.join(" "))
    }

    /// Serialized text; identical to the canonical code.
    pub fn serialize(&self) -> String {
        self.canonical_code().0
    }

    /// The same diagram re-indexed in canonical crossing order.
    pub fn canonicalize(&self) -> StuckDiagram {
        StuckDiagram::parse(self.canonical_code().as_str()).expect("canonical codes always parse")
    }

    /// Traversal base points: the outgoing end of the lowest-labeled arc of
    /// every strand cycle, cycles ordered by that label across pieces in
    /// canonical order.
    pub fn base_points(&self) -> Vec<End> {
        let mut out = Vec::new();
        for (lab, _) in self.canonical_labelings() {
            let mut by_label: Vec<(u32, End)> = lab.labels.iter().map(|(e, l)| (*l, *e)).collect();
            by_label.sort_unstable();
            let mut seen = std::collections::HashSet::new();
            for (_, e) in by_label {
                if seen.contains(&e) {
                    continue;
                }
                out.push(e);
                let mut cur = e;
                loop {
                    seen.insert(cur);
                    cur = self.next_out(cur);
                    if cur == e {
                        break;
                    }
                }
            }
        }
        out
    }
}
