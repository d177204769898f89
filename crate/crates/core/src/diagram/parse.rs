//! Text format: `#` starts a comment; tokens are `X[a,b,c,d]` (classical),
//! `S[a,b,c,d]` (stuck) and `O` (free loop), separated by whitespace.
//!
//! Arc orientation is read off the under-strands. A component that passes
//! over at every one of its crossings carries no such information; it is
//! oriented so that, at the first crossing in token order it touches, it
//! leaves through the slot holding the smaller arc id.

use std::collections::{BTreeMap, VecDeque};
use std::str::FromStr;

use super::{Crossing, CrossingKind, End, StuckDiagram};
use crate::error::{Error, Result};

struct RawCrossing {
    kind: CrossingKind,
    arcs: [u32; 4],
}

fn tokenize(text: &str) -> Result<(Vec<RawCrossing>, usize)> {
    let mut crossings = Vec::new();
    let mut loops = 0;
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        let mut rest = line.trim_start();
        while !rest.is_empty() {
            if let Some(r) = rest.strip_prefix('O') {
                if r.starts_with(|ch: char| ch.is_alphanumeric() || ch == '[') {
                    return Err(Error::Syntax(first_word(rest).into()));
                }
                loops += 1;
                rest = r;
            } else if rest.starts_with('X') || rest.starts_with('S') {
                let kind = if rest.starts_with('X') { CrossingKind::Classical } else { CrossingKind::Stuck };
                let close = rest.find(']').ok_or_else(|| Error::Syntax(first_word(rest).into()))?;
                let token = &rest[..=close];
                let inner = token[1..]
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| Error::Syntax(token.into()))?;
                let ids: Vec<u32> = inner
                    .split(',')
                    .map(|s| s.trim().parse::<u32>().ok().filter(|&v| v > 0))
                    .collect::<Option<_>>()
                    .ok_or_else(|| Error::Syntax(token.into()))?;
                let arcs: [u32; 4] = ids.try_into().map_err(|_| Error::Syntax(token.into()))?;
                crossings.push(RawCrossing { kind, arcs });
                rest = &rest[close + 1..];
            } else {
                return Err(Error::Syntax(first_word(rest).into()));
            }
            rest = rest.trim_start_matches(|ch: char| ch.is_whitespace() || ch == ',' || ch == ';');
        }
    }
    Ok((crossings, loops))
}

fn first_word(s: &str) -> &str {
    s.split_whitespace().next().unwrap_or(s)
}

/// Whether an end is incoming: fixed for under slots, tied to the crossing's
/// over-orientation flag for over slots.
#[derive(Clone, Copy)]
enum Incoming {
    Fixed(bool),
    /// Incoming iff `over_enters_at_1 == polarity`.
    Flag { crossing: usize, polarity: bool },
}

fn incoming_literal(e: End) -> Incoming {
    match e.slot {
        0 => Incoming::Fixed(true),
        2 => Incoming::Fixed(false),
        1 => Incoming::Flag { crossing: e.crossing, polarity: true },
        _ => Incoming::Flag { crossing: e.crossing, polarity: false },
    }
}

impl StuckDiagram {
    pub fn parse(text: &str) -> Result<Self> {
        let (raw, free_loops) = tokenize(text)?;
        let n = raw.len();

        let mut occurrences: BTreeMap<u32, Vec<End>> = BTreeMap::new();
        for (c, rc) in raw.iter().enumerate() {
            for (s, &arc) in rc.arcs.iter().enumerate() {
                occurrences.entry(arc).or_default().push(End::new(c, s));
            }
        }
        if let Some((&arc, ends)) = occurrences.iter().find(|(_, v)| v.len() != 2) {
            return Err(Error::ArcMultiplicity { arc, count: ends.len() });
        }

        // Orientation: one flag per crossing, solved by propagation along arcs.
        let mut flag: Vec<Option<bool>> = vec![None; n];
        let mut edges: Vec<Vec<(usize, bool, u32)>> = vec![Vec::new(); n];
        let mut unary: Vec<(usize, bool, u32)> = Vec::new();
        for (&arc, ends) in &occurrences {
            match (incoming_literal(ends[0]), incoming_literal(ends[1])) {
                (Incoming::Fixed(x), Incoming::Fixed(y)) => {
                    if x == y {
                        return Err(Error::Orientation { arc });
                    }
                }
                (Incoming::Fixed(b), Incoming::Flag { crossing, polarity })
                | (Incoming::Flag { crossing, polarity }, Incoming::Fixed(b)) => {
                    unary.push((crossing, polarity ^ b, arc));
                }
                (Incoming::Flag { crossing: c1, polarity: p1 }, Incoming::Flag { crossing: c2, polarity: p2 }) => {
                    // flag2 = flag1 ^ p1 ^ p2 ^ 1
                    let rel = !(p1 ^ p2);
                    if c1 == c2 {
                        if rel {
                            return Err(Error::Orientation { arc });
                        }
                    } else {
                        edges[c1].push((c2, rel, arc));
                        edges[c2].push((c1, rel, arc));
                    }
                }
            }
        }

        let mut queue = VecDeque::new();
        let assign = |c: usize, v: bool, arc: u32, flag: &mut Vec<Option<bool>>, queue: &mut VecDeque<usize>| {
            match flag[c] {
                Some(old) if old != v => Err(Error::Orientation { arc }),
                Some(_) => Ok(()),
                None => {
                    flag[c] = Some(v);
                    queue.push_back(c);
                    Ok(())
                }
            }
        };
        let propagate = |flag: &mut Vec<Option<bool>>, queue: &mut VecDeque<usize>| -> Result<()> {
            while let Some(c) = queue.pop_front() {
                let v = flag[c].expect("queued crossings are assigned");
                for &(d, rel, arc) in &edges[c] {
                    assign(d, v ^ rel, arc, flag, queue)?;
                }
            }
            Ok(())
        };
        for &(c, v, arc) in &unary {
            assign(c, v, arc, &mut flag, &mut queue)?;
        }
        propagate(&mut flag, &mut queue)?;
        for c in 0..n {
            if flag[c].is_none() {
                let [_, b, _, d] = raw[c].arcs;
                // leave through the smaller id: leaving at 1 means entering at 3
                let enters_at_1 = b >= d;
                assign(c, enters_at_1, b, &mut flag, &mut queue)?;
                propagate(&mut flag, &mut queue)?;
            }
        }

        let crossings: Vec<Crossing> = raw
            .iter()
            .zip(&flag)
            .map(|(rc, f)| Crossing { kind: rc.kind, over_enters_at_1: f.expect("all flags assigned") })
            .collect();
        let mut links = vec![[End::new(0, 0); 4]; n];
        for ends in occurrences.values() {
            links[ends[0].crossing][ends[0].slot] = ends[1];
            links[ends[1].crossing][ends[1].slot] = ends[0];
        }
        StuckDiagram::from_parts(crossings, links, free_loops)
    }
}

impl FromStr for StuckDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StuckDiagram::parse(s)
    }
}
