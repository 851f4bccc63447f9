//! Split colourings: detection and direct partition into at most three
//! monochromatic cycles (exactly two whenever possible).
//!
//! A colouring is *split* when `X = X1 ∪ X2` and `Y = Y1 ∪ Y2` with all four
//! parts nonempty, edges red inside the block pairs `(X1,Y1)`, `(X2,Y2)`
//! and blue across. Split colourings are exactly the ones with no
//! monochromatic Hamiltonian simple path, so the solver handles them as a
//! dedicated branch.

use crate::colouring::{Colour, Colouring, Cycle, Partition, Vertex};
use crate::error::{Error, Result};
use crate::verify::verify_split;

/// The four nonempty index sets witnessing a split colouring, each sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitCertificate {
    pub x1: Vec<u32>,
    pub x2: Vec<u32>,
    pub y1: Vec<u32>,
    pub y2: Vec<u32>,
}

/// Detect a split colouring.
///
/// Groups X-indices by their red neighbourhood in Y; the colouring is split
/// iff there are exactly two groups, their neighbourhoods are set
/// complements of each other, and both are nonempty. The canonical
/// certificate puts `x_1`'s group in `X1` and its red neighbourhood in `Y1`.
pub fn detect_split(c: &Colouring) -> Option<SplitCertificate> {
    let n = c.n() as u32;
    let first = c.red_row(1);
    let mut x1 = Vec::new();
    let mut x2 = Vec::new();
    for i in 1..=n {
        let row = c.red_row(i);
        if row == first {
            x1.push(i);
        } else {
            x2.push(i);
        }
    }
    if x2.is_empty() {
        return None;
    }
    let complement: Vec<u32> = (1..=n).filter(|j| !first.contains(j)).collect();
    if first.is_empty() || complement.is_empty() {
        return None;
    }
    // Exactly two groups: every row outside x1 must equal the complement.
    if x2.iter().any(|&i| c.red_row(i) != complement) {
        return None;
    }
    let cert = SplitCertificate { x1, x2, y1: first, y2: complement };
    debug_assert!(verify_split(c, &cert));
    Some(cert)
}

/// Two cycles suffice iff `|X1| = |Y1|` or `|X1| = |Y2|`.
pub fn split_two_cycle_feasible(cert: &SplitCertificate) -> bool {
    cert.x1.len() == cert.y1.len() || cert.x1.len() == cert.y2.len()
}

/// Interleave sorted X- and Y-indices into a cycle vertex sequence
/// `(x, y, x, y, …)`; sizes must be equal and ≥ 1.
fn interleaved_cycle(xs: &[u32], ys: &[u32], colour: Colour) -> Cycle {
    debug_assert_eq!(xs.len(), ys.len());
    debug_assert!(!xs.is_empty());
    let mut vertices = Vec::with_capacity(2 * xs.len());
    for (&i, &j) in xs.iter().zip(ys) {
        vertices.push(Vertex::x(i));
        vertices.push(Vertex::y(j));
    }
    Cycle::from_vertices(vertices, colour)
}

/// Partition a split colouring into at most 3 monochromatic cycles
/// (exactly 2 when [`split_two_cycle_feasible`]).
///
/// After swapping block roles so that `|X1| ≥ |Y1|`: if `|X1| = |Y1|`, the
/// two diagonal blocks each give a red cycle; else if `|X1| = |Y2|`, the
/// two off-diagonal blocks each give a blue cycle; otherwise a red cycle on
/// `Y1` plus `|Y1|` vertices of `X1`, a red cycle on `X2` plus `|X2|`
/// vertices of `Y2`, and a blue cycle on the leftovers.
pub fn partition_split(c: &Colouring, cert: &SplitCertificate) -> Result<Partition> {
    if !verify_split(c, cert) {
        return Err(Error::InvalidCertificate(
            "split certificate does not verify against the colouring".into(),
        ));
    }
    let (mut x1, mut x2) = (cert.x1.clone(), cert.x2.clone());
    let (mut y1, mut y2) = (cert.y1.clone(), cert.y2.clone());
    for v in [&mut x1, &mut x2, &mut y1, &mut y2] {
        v.sort_unstable();
    }
    if x1.len() < y1.len() {
        std::mem::swap(&mut x1, &mut x2);
        std::mem::swap(&mut y1, &mut y2);
    }
    let cycles = if x1.len() == y1.len() {
        // Same-colour red pair, preferred when both criteria hold.
        vec![
            interleaved_cycle(&x1, &y1, Colour::Red),
            interleaved_cycle(&x2, &y2, Colour::Red),
        ]
    } else if x1.len() == y2.len() {
        vec![
            interleaved_cycle(&x1, &y2, Colour::Blue),
            interleaved_cycle(&x2, &y1, Colour::Blue),
        ]
    } else {
        // |X1| > |Y1| and |X2| < |Y2|: two red block cycles, blue leftover.
        let (x1_used, x1_rest) = x1.split_at(y1.len());
        let (y2_used, y2_rest) = y2.split_at(x2.len());
        debug_assert_eq!(x1_rest.len(), y2_rest.len());
        vec![
            interleaved_cycle(x1_used, &y1, Colour::Red),
            interleaved_cycle(&x2, y2_used, Colour::Red),
            interleaved_cycle(x1_rest, y2_rest, Colour::Blue),
        ]
    };
    Ok(Partition::new(cycles))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::build_colouring;
    use crate::gen::gen_split;
    use crate::verify::verify_partition;

    #[test]
    fn minimal_split_detected() {
        let c = build_colouring(2, &["RB", "BR"]).unwrap();
        let cert = detect_split(&c).unwrap();
        assert_eq!(cert.x1, vec![1]);
        assert_eq!(cert.x2, vec![2]);
        assert_eq!(cert.y1, vec![1]);
        assert_eq!(cert.y2, vec![2]);
    }

    #[test]
    fn all_red_not_split() {
        let c = Colouring::from_fn(2, |_, _| Colour::Red);
        assert!(detect_split(&c).is_none());
    }

    #[test]
    fn block_pattern_detected() {
        let c = build_colouring(4, &["RRRB", "RRRB", "BBBR", "BBBR"]).unwrap();
        let cert = detect_split(&c).unwrap();
        assert_eq!(cert.x1, vec![1, 2]);
        assert_eq!(cert.y1, vec![1, 2, 3]);
        assert_eq!(cert.x2, vec![3, 4]);
        assert_eq!(cert.y2, vec![4]);
    }

    #[test]
    fn minimal_split_two_red_edge_cycles() {
        let c = build_colouring(2, &["RB", "BR"]).unwrap();
        let cert = detect_split(&c).unwrap();
        let p = partition_split(&c, &cert).unwrap();
        assert_eq!(p.len(), 2);
        let r = verify_partition(&c, &p);
        assert!(r.valid, "{:?}", r.failure);
        assert_eq!(r.red_cycles, 2);
    }

    #[test]
    fn unbalanced_blocks_need_three() {
        let (c, cert) = gen_split(1, 2, 4).unwrap();
        assert!(!split_two_cycle_feasible(&cert));
        let p = partition_split(&c, &cert).unwrap();
        assert_eq!(p.len(), 3);
        assert!(verify_partition(&c, &p).valid);
    }

    #[test]
    fn cross_matched_blocks_need_two() {
        let (c, cert) = gen_split(2, 1, 3).unwrap();
        assert!(split_two_cycle_feasible(&cert));
        let p = partition_split(&c, &cert).unwrap();
        assert_eq!(p.len(), 2);
        assert!(verify_partition(&c, &p).valid);
    }

    #[test]
    fn feasibility_predicate() {
        let case = |a: usize, b: usize, n: usize| {
            let (_, cert) = gen_split(a, b, n).unwrap();
            split_two_cycle_feasible(&cert)
        };
        assert!(case(1, 1, 2));
        assert!(!case(1, 2, 4)); // |X1|=1 vs |Y1|=2, |Y2|=2
        assert!(case(2, 1, 3)); // |X1|=2 = |Y2|
    }

    #[test]
    fn invalid_certificate_rejected() {
        let c = Colouring::from_fn(2, |_, _| Colour::Red);
        let cert = SplitCertificate { x1: vec![1], x2: vec![2], y1: vec![1], y2: vec![2] };
        assert!(partition_split(&c, &cert).is_err());
    }
}
