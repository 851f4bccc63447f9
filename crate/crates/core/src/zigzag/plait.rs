//! The even-plait induction: establish that all same-parity edges of the
//! first levels are blue (or finish early with at most three cycles),
//! extend the plait level by level, and finish the whole view.

use crate::colouring::{Colour, Colouring, Cycle, Partition, Side, Vertex};
use crate::error::{Error, Result};
use crate::oracle::min_cycle_partition;
use crate::zigzag::cascade;
use crate::zigzag::{
    red_cycle_from_path, red_two_cycles_from_chord, transpose_partition, ChordVariant, ZigzagView,
};

/// State of the induction: every edge `x_i y_j` with `i ≡ j (mod 2)` and
/// `i, j ≤ k` is known blue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlaitState {
    pub k: u32,
}

/// Outcome of a plait step: either a complete ≤3-cycle partition or a
/// plait one level taller.
#[derive(Debug, Clone)]
pub enum PlaitStep {
    Finished(Partition),
    Extended(PlaitState),
}

/// The blue Hamiltonian cycle of one parity side of the first `k` levels:
/// levels `i ≤ k` with `i ≡ parity (mod 2)`, chained as
/// `(x_{i_1}, y_{i_2}, x_{i_2}, …, x_{i_r}, y_{i_1})`. A single level
/// yields a blue edge-cycle.
pub fn side_ham_cycle(k: u32, parity: u32) -> Cycle {
    let levels: Vec<u32> = (1..=k).filter(|i| i % 2 == parity % 2).collect();
    debug_assert!(!levels.is_empty());
    let mut vertices = vec![Vertex::x(levels[0])];
    for &i in &levels[1..] {
        vertices.push(Vertex::y(i));
        vertices.push(Vertex::x(i));
    }
    vertices.push(Vertex::y(levels[0]));
    Cycle::from_vertices(vertices, Colour::Blue)
}

/// A Hamiltonian path through one parity side of the first `k` levels.
///
/// The side graph is completely blue under the plait invariant, so a path
/// from `start` to `end` through every non-excluded side vertex exists
/// whenever the class counts allow one; `required` edges are traversed
/// consecutively. Infeasible requests are reported as errors.
pub fn plait_side_path(
    z: &ZigzagView,
    k: u32,
    parity: u32,
    start: Vertex,
    end: Vertex,
    excluded: &[Vertex],
    required: &[(Vertex, Vertex)],
) -> Result<Vec<Vertex>> {
    let in_side = |v: Vertex| v.index >= 1 && v.index <= k && v.index % 2 == parity % 2;
    for v in [start, end].iter().chain(excluded) {
        if !in_side(*v) {
            return Err(Error::Precondition(format!("vertex {v} is not on the requested side")));
        }
    }
    if start == end {
        return Err(Error::Precondition("side path endpoints must differ".into()));
    }
    let mut partner = std::collections::HashMap::new();
    for &(a, b) in required {
        if !in_side(a) || !in_side(b) || a.side == b.side {
            return Err(Error::Precondition(format!("required edge {a}–{b} is not a side edge")));
        }
        partner.insert(a, b);
        partner.insert(b, a);
    }
    let mut vertices: Vec<Vertex> = Vec::new();
    for i in (1..=k).filter(|i| i % 2 == parity % 2) {
        vertices.push(Vertex::x(i));
        vertices.push(Vertex::y(i));
    }
    vertices.retain(|v| !excluded.contains(v));
    if excluded.contains(&start) || excluded.contains(&end) {
        return Err(Error::Precondition("an endpoint is excluded".into()));
    }
    let count = |side: Side| vertices.iter().filter(|v| v.side == side).count();
    let (cx, cy) = (count(Side::X), count(Side::Y));
    let feasible = if start.side == end.side {
        let (a, b) = if start.side == Side::X { (cx, cy) } else { (cy, cx) };
        a == b + 1
    } else {
        cx == cy
    };
    if !feasible {
        return Err(Error::Precondition(format!(
            "no alternating side path from {start} to {end} over {cx}+{cy} vertices"
        )));
    }

    let mut used: std::collections::HashSet<Vertex> = std::collections::HashSet::new();
    let mut seq = vec![start];
    used.insert(start);
    while seq.len() < vertices.len() {
        let last = *seq.last().unwrap();
        let need = last.side.opposite();
        let remaining = vertices.len() - seq.len();
        let next = if let Some(&p) = partner.get(&last).filter(|p| !used.contains(p)) {
            if p.side != need || (p == end && remaining > 1) {
                return Err(Error::Precondition(format!(
                    "required edge {last}–{p} cannot be routed"
                )));
            }
            p
        } else {
            // Save `end` — and any vertex bonded to `end` — for the tail.
            let pick = vertices
                .iter()
                .copied()
                .filter(|v| v.side == need && !used.contains(v))
                .filter(|v| {
                    if *v == end {
                        remaining == 1
                    } else if partner.get(v) == Some(&end) {
                        remaining == 2
                    } else {
                        true
                    }
                })
                .min_by_key(|v| v.index);
            match pick {
                Some(v) => v,
                None => {
                    return Err(Error::Precondition(format!(
                        "side path from {start} to {end} ran out of {need:?}-class vertices"
                    )))
                }
            }
        };
        seq.push(next);
        used.insert(next);
    }
    if *seq.last().unwrap() != end {
        return Err(Error::Precondition("side path could not terminate at the endpoint".into()));
    }
    for w in seq.windows(2) {
        if z.edge(w[0], w[1]) != Colour::Blue {
            return Err(Error::Internal(format!(
                "plait side edge {}–{} is not blue",
                w[0], w[1]
            )));
        }
    }
    Ok(seq)
}

/// Probe the level-by-level base cases; either at most three cycles fall
/// out directly, or all same-parity edges of the first four levels are
/// blue and the plait starts at `k = 4`.
pub fn establish_base_plait(z: &ZigzagView) -> Result<PlaitStep> {
    if z.m() < 5 {
        return Err(Error::Precondition(format!(
            "the plait induction needs at least 5 levels, got {}",
            z.m()
        )));
    }
    let blue_edge = |i: u32| Cycle::edge(Vertex::x(i), Vertex::y(i), Colour::Blue);
    let finish = |cycles: Vec<Cycle>| -> Result<PlaitStep> {
        let p = Partition::new(cycles);
        z.check_partition(&p, "base plait")?;
        Ok(PlaitStep::Finished(p))
    };
    if z.probe(1, 1, "base diagonal 1") == Colour::Red {
        return finish(vec![red_cycle_from_path(z, 1)?]);
    }
    if z.probe(2, 2, "base diagonal 2") == Colour::Red {
        return finish(vec![red_cycle_from_path(z, 2)?, blue_edge(1)]);
    }
    if z.probe(1, 3, "base row chord 1") == Colour::Red {
        return finish(red_two_cycles_from_chord(z, 1, ChordVariant::Row)?.to_vec());
    }
    if z.probe(3, 1, "base column chord 1") == Colour::Red {
        return finish(red_two_cycles_from_chord(z, 1, ChordVariant::Col)?.to_vec());
    }
    if z.probe(3, 3, "base diagonal 3") == Colour::Red {
        return finish(vec![red_cycle_from_path(z, 3)?, blue_edge(1), blue_edge(2)]);
    }
    if z.probe(2, 4, "base row chord 2") == Colour::Red {
        let mut cycles = red_two_cycles_from_chord(z, 2, ChordVariant::Row)?.to_vec();
        cycles.push(blue_edge(1));
        return finish(cycles);
    }
    if z.probe(4, 2, "base column chord 2") == Colour::Red {
        let mut cycles = red_two_cycles_from_chord(z, 2, ChordVariant::Col)?.to_vec();
        cycles.push(blue_edge(1));
        return finish(cycles);
    }
    if z.probe(4, 4, "base diagonal 4") == Colour::Red {
        let square = Cycle::from_vertices(
            vec![Vertex::x(1), Vertex::y(1), Vertex::x(3), Vertex::y(3)],
            Colour::Blue,
        );
        return finish(vec![red_cycle_from_path(z, 4)?, square, blue_edge(2)]);
    }
    Ok(PlaitStep::Extended(PlaitState { k: 4 }))
}

/// Try to grow the plait from `k` to `k + 1`: probe the new diagonal and
/// every same-parity edge at level `k + 1`. A red diagonal finishes
/// immediately; a red off-diagonal witness starts the probe cascade; all
/// blue extends the plait.
pub fn extend_plait(z: &ZigzagView, ps: PlaitState) -> Result<PlaitStep> {
    let k = ps.k;
    let m = z.m() as u32;
    if k < 4 || k + 2 > m {
        return Err(Error::OutOfRange(format!("plait level {k} outside 4..={}", m - 2)));
    }
    if z.probe(k + 1, k + 1, "extend diagonal") == Colour::Red {
        let p = Partition::new(vec![
            red_cycle_from_path(z, k + 1)?,
            side_ham_cycle(k, 1),
            side_ham_cycle(k, 2),
        ]);
        z.check_partition(&p, "extend diagonal finish")?;
        return Ok(PlaitStep::Finished(p));
    }
    let alpha = if k.is_multiple_of(2) { 1u32 } else { 2u32 };
    for j in (alpha..=k - 1).step_by(2) {
        if z.probe(k + 1, j, "extend row scan") == Colour::Red {
            let p = cascade::run(z, k, j, alpha)?;
            z.check_partition(&p, "cascade finish")?;
            return Ok(PlaitStep::Finished(p));
        }
        if z.probe(j, k + 1, "extend column scan") == Colour::Red {
            let t = z.transposed();
            let p = transpose_partition(&cascade::run(&t, k, j, alpha)?);
            z.check_partition(&p, "transposed cascade finish")?;
            return Ok(PlaitStep::Finished(p));
        }
    }
    Ok(PlaitStep::Extended(PlaitState { k: k + 1 }))
}

/// Partition any zigzag view into at most three monochromatic cycles.
pub fn partition_three(z: &ZigzagView) -> Result<Partition> {
    let m = z.m();
    if m <= 5 {
        // Small boards: materialise the view and ask the exact search.
        let c = Colouring::from_fn(m, |i, j| z.colour(i, j));
        let r = min_cycle_partition(&c, m.max(1))?;
        if r.minimum > 3 {
            return Err(Error::Internal(format!(
                "a {m}-level zigzag view needed {} cycles",
                r.minimum
            )));
        }
        z.check_partition(&r.witness, "small-board finish")?;
        return Ok(r.witness);
    }
    let mut state = match establish_base_plait(z)? {
        PlaitStep::Finished(p) => return Ok(p),
        PlaitStep::Extended(s) => s,
    };
    while state.k + 2 <= m as u32 {
        state = match extend_plait(z, state)? {
            PlaitStep::Finished(p) => return Ok(p),
            PlaitStep::Extended(s) => s,
        };
    }
    // The plait reached level m − 1: the two parity sides close into blue
    // cycles and the top level is a red path edge.
    debug_assert_eq!(state.k, m as u32 - 1);
    let p = Partition::new(vec![
        Cycle::edge(Vertex::x(m as u32), Vertex::y(m as u32), Colour::Red),
        side_ham_cycle(state.k, 1),
        side_ham_cycle(state.k, 2),
    ]);
    z.check_partition(&p, "full plait finish")?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zigzag::testutil::{sparse_board, zig};

    #[test]
    fn side_cycles_chain_levels() {
        let even = side_ham_cycle(4, 2);
        assert_eq!(
            even.vertices,
            vec![Vertex::x(2), Vertex::y(4), Vertex::x(4), Vertex::y(2)]
        );
        let single = side_ham_cycle(2, 1);
        assert_eq!(single.vertices, vec![Vertex::x(1), Vertex::y(1)]);
    }

    #[test]
    fn side_path_examples() {
        let c = sparse_board(8);
        let z = zig(&c);
        let p = plait_side_path(&z, 4, 2, Vertex::x(2), Vertex::y(2), &[], &[]).unwrap();
        assert_eq!(p, vec![Vertex::x(2), Vertex::y(4), Vertex::x(4), Vertex::y(2)]);
        let q =
            plait_side_path(&z, 4, 1, Vertex::x(1), Vertex::x(3), &[Vertex::y(1)], &[]).unwrap();
        assert_eq!(q, vec![Vertex::x(1), Vertex::y(3), Vertex::x(3)]);
        // A required edge is placed consecutively.
        let r = plait_side_path(
            &z,
            6,
            2,
            Vertex::x(2),
            Vertex::y(2),
            &[],
            &[(Vertex::x(6), Vertex::y(6))],
        )
        .unwrap();
        let i6 = r.iter().position(|&v| v == Vertex::x(6)).unwrap();
        let j6 = r.iter().position(|&v| v == Vertex::y(6)).unwrap();
        assert_eq!(i6.abs_diff(j6), 1);
        assert_eq!(r.len(), 6);
    }

    #[test]
    fn side_path_rejects_infeasible_requests() {
        let c = sparse_board(6);
        let z = zig(&c);
        // Same-class endpoints with balanced counts cannot alternate.
        assert!(plait_side_path(&z, 4, 1, Vertex::x(1), Vertex::x(3), &[], &[]).is_err());
        assert!(plait_side_path(&z, 4, 1, Vertex::x(1), Vertex::x(1), &[], &[]).is_err());
        assert!(plait_side_path(&z, 4, 1, Vertex::x(1), Vertex::x(2), &[], &[]).is_err());
    }

    #[test]
    fn base_plait_branches() {
        // A sparse board has no red probes: the base plait survives to 4.
        let c = sparse_board(6);
        let z = zig(&c);
        match establish_base_plait(&z).unwrap() {
            PlaitStep::Extended(s) => assert_eq!(s.k, 4),
            PlaitStep::Finished(_) => panic!("expected a plait"),
        }
        // An all-red board finishes with the single suffix cycle.
        let red = Colouring::from_fn(6, |_, _| Colour::Red);
        let zr = zig(&red);
        match establish_base_plait(&zr).unwrap() {
            PlaitStep::Finished(p) => assert_eq!(p.len(), 1),
            PlaitStep::Extended(_) => panic!("expected a finish"),
        }
        // First red probe at the level-4 diagonal: three cycles.
        let sparse = sparse_board(6);
        let d4 = Colouring::from_fn(6, |i, j| {
            if sparse.colour(i, j) == Colour::Red || (i >= 4 && j >= 4) {
                Colour::Red
            } else {
                Colour::Blue
            }
        });
        let z4 = zig(&d4);
        match establish_base_plait(&z4).unwrap() {
            PlaitStep::Finished(p) => assert_eq!(p.len(), 3),
            PlaitStep::Extended(_) => panic!("expected a finish"),
        }
    }

    #[test]
    fn full_plait_finish() {
        // No red probe ever fires: the plait reaches the top and the two
        // parity sides close around the final red path edge.
        let c = sparse_board(8);
        let z = zig(&c);
        let p = partition_three(&z).unwrap();
        assert!(p.len() <= 3);
        assert_eq!(p.cycles.iter().map(|c| c.len()).sum::<usize>(), 16);
        assert!(p
            .cycles
            .iter()
            .any(|c| c.vertices == vec![Vertex::x(8), Vertex::y(8)]));
    }
}
