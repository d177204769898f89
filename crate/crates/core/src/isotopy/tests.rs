use super::*;
use crate::bracket::{normalized_bracket, stuck_bracket};
use crate::diagram::StuckDiagram;
use crate::skein::rigid_homflypt;

fn d(s: &str) -> StuckDiagram {
    StuckDiagram::parse(s).unwrap()
}

const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const HALF_RIGID: &str = "S[4,1,1,2] X[3,3,4,2]";

fn kinds(ms: &[Move]) -> Vec<MoveKind> {
    ms.iter().map(|m| m.kind).collect()
}

#[test]
fn rigid_curl_blocks_removal() {
    let rig = d("S[1,2,2,1]");
    let ms = available_moves(&rig, false, 1);
    assert!(ms.is_empty(), "{ms:?}");
    let ms = available_moves(&rig, true, 1);
    assert_eq!(kinds(&ms), vec![MoveKind::Unstick]);
}

#[test]
fn classical_curl_removes() {
    let cl = d("X[1,2,2,1]");
    let ms = available_moves(&cl, false, 1);
    assert_eq!(kinds(&ms), vec![MoveKind::R1Remove]);
    assert_eq!(apply_move(&cl, &ms[0]).unwrap(), StuckDiagram::unknot());
}

#[test]
fn half_rigid_pair_cancels_after_unstick() {
    let h = d(HALF_RIGID);
    assert!(!available_moves(&h, false, 2).iter().any(|m| m.kind == MoveKind::R2Remove));
    let un = available_moves(&h, true, 2).into_iter().find(|m| m.kind == MoveKind::Unstick).unwrap();
    let free = apply_move(&h, &un).unwrap();
    let r2 = available_moves(&free, false, 2).into_iter().find(|m| m.kind == MoveKind::R2Remove).unwrap();
    assert_eq!(apply_move(&free, &r2).unwrap(), StuckDiagram::unknot());
}

#[test]
fn inapplicable_moves_are_rejected() {
    let rig = d("S[1,2,2,1]");
    let m = Move { kind: MoveKind::R1Remove, crossings: vec![0], darts: vec![], under: None };
    assert!(matches!(apply_move(&rig, &m), Err(crate::Error::InapplicableMove(_))));
    let m = Move { kind: MoveKind::Unstick, crossings: vec![0], darts: vec![], under: None };
    assert!(apply_move(&d(TREFOIL), &m).is_err());
}

#[test]
fn r2_add_then_remove_restores() {
    for s in [TREFOIL, "X[1,2,2,1]", HALF_RIGID] {
        let x = d(s);
        let n = x.crossing_count();
        for m in available_moves(&x, false, n + 2).into_iter().filter(|m| m.kind == MoveKind::R2Add) {
            let y = apply_move(&x, &m).unwrap();
            let back = Move { kind: MoveKind::R2Remove, crossings: vec![n, n + 1], darts: vec![], under: None };
            let z = apply_move(&y, &back).unwrap_or_else(|e| panic!("{m}: {e}"));
            assert_eq!(z.canonical_code(), x.canonical_code(), "{m}");
        }
    }
}

#[test]
fn every_move_preserves_invariants() {
    let samples = [
        TREFOIL.to_string(),
        HALF_RIGID.to_string(),
        "S[1,2,2,1]".to_string(),
        "O".to_string(),
        d(TREFOIL).stick(1).unwrap().to_string(),
        "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]".to_string(),
    ];
    for s in &samples {
        let x = d(s);
        let p = rigid_homflypt(&x).unwrap();
        let b = normalized_bracket(&x).unwrap();
        let raw = stuck_bracket(&x).unwrap();
        for m in available_moves(&x, false, x.crossing_count() + 2) {
            let y = apply_move(&x, &m).unwrap();
            assert_eq!(y.stuck_count(), x.stuck_count(), "{s} {m}");
            assert_eq!(rigid_homflypt(&y).unwrap(), p, "{s} {m}");
            // a slide can move arcs into the fused component of a rigid vertex
            if m.kind == MoveKind::RigidSlide {
                continue;
            }
            assert_eq!(normalized_bracket(&y).unwrap(), b, "{s} {m}");
            if matches!(m.kind, MoveKind::R2Add | MoveKind::R2Remove | MoveKind::R3) {
                assert_eq!(stuck_bracket(&y).unwrap(), raw, "{s} {m}");
            }
        }
    }
}

#[test]
fn triangle_moves_exist() {
    // a positive trefoil with an R2 finger yields classical triangles
    let x = d(TREFOIL);
    let mut found = false;
    for m in available_moves(&x, false, 5).into_iter().filter(|m| m.kind == MoveKind::R2Add) {
        let y = apply_move(&x, &m).unwrap();
        if available_moves(&y, false, 5).iter().any(|m| m.kind == MoveKind::R3) {
            found = true;
        }
    }
    assert!(found);
}

#[test]
fn barriers() {
    let bs = detect_barriers(&d("S[1,2,2,1]"));
    assert_eq!(bs.len(), 1);
    assert_eq!(bs[0].kind, BarrierKind::RigidTwist);
    assert!(detect_barriers(&d(TREFOIL)).is_empty());
    assert_eq!(barrier_lower_bound(&d(TREFOIL)), 0);
    assert_eq!(barrier_lower_bound(&d("S[1,2,2,1]")), 1);
    let twists = d("S[1,2,2,3] S[3,4,4,5] S[5,6,6,1]");
    let bs = detect_barriers(&twists);
    assert_eq!(bs.iter().filter(|b| b.kind == BarrierKind::RigidTwist).count(), 3);
    assert_eq!(barrier_lower_bound(&twists), 3);
    let h = detect_barriers(&d(HALF_RIGID));
    assert!(h.iter().any(|b| b.kind == BarrierKind::HalfRigidR2));
}

#[test]
fn distances() {
    let o = StuckDiagram::unknot();
    let r = unsticking_distance(&d("S[1,2,2,1]"), &o, 3, 100_000);
    assert_eq!((r.lower, r.upper, r.exact), (1, Some(1), Some(1)));
    let cert = r.certificate.unwrap();
    assert_eq!(replay_certificate(&d("S[1,2,2,1]"), &cert).unwrap(), o);
    let t = d(TREFOIL);
    let r = unsticking_distance(&t, &t, 3, 1000);
    assert_eq!(r.exact, Some(0));
    assert_eq!(unstick_upper_bound(&d("X[1,2,2,1]"), &o, 3), Ok(Some(0)));
    assert!(matches!(unstick_upper_bound(&t, &o, 3), Err(crate::Error::InvariantMismatch(_))));
}

#[test]
fn fuzz_is_deterministic() {
    let x = d("S[1,2,2,1]");
    let (a, ma) = fuzz_sequence(&x, 8, 7, 5);
    let (b, mb) = fuzz_sequence(&x, 8, 7, 5);
    assert_eq!((a.clone(), ma), (b, mb));
    assert_eq!(a.stuck_count(), 1);
    assert_eq!(fuzz_sequence(&x, 0, 1, 5).0, x);
}

#[test]
fn simplify_reduces_classical_unknots() {
    let x = d("X[1,2,2,3] X[3,4,4,1]");
    assert_eq!(simplify(&x).0, StuckDiagram::unknot());
    assert_eq!(simplify(&d("S[1,2,2,1]")).0.crossing_count(), 1);
}
