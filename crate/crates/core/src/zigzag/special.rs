//! Splicing blue cycles along blue chord pairs, and finishing a view from
//! a "special set" witness: nested blue Hamiltonian cycles of the first
//! `k − 2`, `k − 1` and `k` levels.

use crate::colouring::{Colour, Cycle, Partition, Side, Vertex};
use crate::error::{Error, Result};
use crate::zigzag::weak::{weak_from, WeakCondition};
use crate::zigzag::{red_two_cycles_from_chord, ChordVariant, ZigzagView};

/// Merge two vertex-disjoint blue cycles into one blue cycle.
///
/// `u1`/`us` must be adjacent on `c1`, `v1`/`vt` adjacent on `c2`, and the
/// two crossing chords `u1–vt` and `v1–us` must be blue. The result walks
/// `c1` from `us` around to `u1` (skipping the edge between them), crosses
/// to `vt`, walks `c2` around to `v1` and crosses back.
pub fn splice(
    z: &ZigzagView,
    c1: &Cycle,
    c2: &Cycle,
    u1: Vertex,
    us: Vertex,
    v1: Vertex,
    vt: Vertex,
) -> Result<Cycle> {
    if c1.vertices.iter().any(|v| c2.vertices.contains(v)) {
        return Err(Error::Precondition("splice requires vertex-disjoint cycles".into()));
    }
    let walk1 = cycle_walk(c1, u1, us)?;
    let walk2 = cycle_walk(c2, v1, vt)?;
    for (a, b) in [(u1, vt), (v1, us)] {
        if z.edge(a, b) != Colour::Blue {
            return Err(Error::Precondition(format!("splice chord {a}–{b} is not blue")));
        }
    }
    // walk1 runs us → … → u1, walk2 runs vt → … → v1.
    let mut vertices = walk1;
    vertices.extend(walk2);
    Ok(Cycle::from_vertices(vertices, Colour::Blue))
}

/// Walk a cycle from `us` around to `u1` without using the edge `u1–us`.
/// For an edge-cycle this keeps its single edge.
fn cycle_walk(c: &Cycle, u1: Vertex, us: Vertex) -> Result<Vec<Vertex>> {
    if !c.has_adjacent_pair(u1, us) {
        return Err(Error::Precondition(format!("{u1} and {us} are not adjacent on the cycle")));
    }
    if c.len() == 2 {
        return Ok(vec![us, u1]);
    }
    let n = c.len();
    let p1 = c.vertices.iter().position(|&v| v == u1).unwrap();
    let ps = c.vertices.iter().position(|&v| v == us).unwrap();
    // Step from us in the direction away from u1.
    let step_up = (ps + 1) % n != p1;
    let mut out = Vec::with_capacity(n);
    let mut p = ps;
    for _ in 0..n {
        out.push(c.vertices[p]);
        p = if step_up { (p + 1) % n } else { (p + n - 1) % n };
    }
    debug_assert_eq!(*out.last().unwrap(), u1);
    Ok(out)
}

/// Replace the (adjacent) edge `a–b` of a blue cycle by a detour through
/// `detour`, which must start next to `a` and end next to `b`.
pub(crate) fn replace_edge(
    z: &ZigzagView,
    c: &Cycle,
    a: Vertex,
    b: Vertex,
    detour: &[Vertex],
) -> Result<Cycle> {
    let walk = cycle_walk(c, a, b)?; // b → … → a
    for w in detour.windows(2) {
        if z.edge(w[0], w[1]) != Colour::Blue {
            return Err(Error::Internal(format!("detour edge {}–{} is not blue", w[0], w[1])));
        }
    }
    let first = *detour.first().ok_or_else(|| Error::Internal("empty detour".into()))?;
    let last = *detour.last().unwrap();
    if z.edge(a, first) != Colour::Blue || z.edge(last, b) != Colour::Blue {
        return Err(Error::Internal("detour attachment edges are not blue".into()));
    }
    let mut vertices = walk; // b … a
    vertices.extend_from_slice(detour);
    Ok(Cycle::from_vertices(vertices, Colour::Blue))
}

/// Witness that the first `k` levels form a special set: nested blue
/// Hamiltonian cycles, the innermost using both of the last two diagonal
/// edges.
#[derive(Debug, Clone)]
pub struct SpecialSetWitness {
    pub k: u32,
    /// Blue Hamiltonian cycle of the first `k − 2` levels; `None` iff `k == 2`.
    pub c1: Option<Cycle>,
    /// Blue Hamiltonian cycle of the first `k − 1` levels.
    pub c2: Cycle,
    /// Blue Hamiltonian cycle of the first `k` levels using the diagonal
    /// edges at levels `k − 1` and `k`.
    pub c3: Cycle,
}

fn check_blue_ham(z: &ZigzagView, c: &Cycle, levels: u32, what: &str) -> Result<()> {
    if c.len() != 2 * levels as usize {
        return Err(Error::Precondition(format!(
            "{what} must cover the first {levels} levels, has {} vertices",
            c.len()
        )));
    }
    let mut seen = vec![false; 2 * levels as usize];
    for &v in &c.vertices {
        if v.index == 0 || v.index > levels {
            return Err(Error::Precondition(format!("{what} contains out-of-range vertex {v}")));
        }
        let slot = (v.index as usize - 1) * 2 + if v.side == Side::X { 0 } else { 1 };
        if seen[slot] {
            return Err(Error::Precondition(format!("{what} repeats vertex {v}")));
        }
        seen[slot] = true;
    }
    let n = c.len();
    for i in 0..n {
        let (a, b) = (c.vertices[i], c.vertices[(i + 1) % n]);
        if a.side == b.side || z.edge(a, b) != Colour::Blue {
            return Err(Error::Precondition(format!("{what} edge {a}–{b} is not blue")));
        }
        if n == 2 {
            break;
        }
    }
    Ok(())
}

fn validate_witness(z: &ZigzagView, w: &SpecialSetWitness) -> Result<()> {
    let m = z.m() as u32;
    if w.k < 2 || w.k > m {
        return Err(Error::Precondition(format!("special set level {} outside 2..={m}", w.k)));
    }
    match (&w.c1, w.k) {
        (None, 2) => {}
        (Some(c1), k) if k > 2 => check_blue_ham(z, c1, k - 2, "inner witness cycle")?,
        (None, k) => {
            return Err(Error::Precondition(format!(
                "special set at level {k} needs an inner witness cycle"
            )))
        }
        (Some(_), _) => {
            return Err(Error::Precondition(
                "special set at level 2 must not carry an inner witness cycle".into(),
            ))
        }
    }
    check_blue_ham(z, &w.c2, w.k - 1, "middle witness cycle")?;
    check_blue_ham(z, &w.c3, w.k, "outer witness cycle")?;
    for i in [w.k - 1, w.k] {
        if !w.c3.has_adjacent_pair(Vertex::x(i), Vertex::y(i)) {
            return Err(Error::Precondition(format!(
                "outer witness cycle must use the diagonal edge at level {i}"
            )));
        }
    }
    Ok(())
}

/// Partition the whole view into at most three monochromatic cycles,
/// given a special-set witness for its first `k` levels.
pub fn special_set_partition(z: &ZigzagView, w: &SpecialSetWitness) -> Result<Partition> {
    validate_witness(z, w)?;
    let m = z.m() as u32;
    let k = w.k;

    let partition = if m == k {
        Partition::new(vec![w.c3.clone()])
    } else if m == k + 1 {
        Partition::new(vec![w.c3.clone(), Cycle::edge(Vertex::x(m), Vertex::y(m), Colour::Red)])
    } else if z.probe(k - 1, k + 1, "special row back-chord") == Colour::Red {
        // Red cycle around the suffix through the back-chord, one red
        // path edge, and the inner witness cycle.
        let mut big = vec![Vertex::x(k - 1)];
        big.extend(z.interval(Vertex::y(k + 1), Vertex::x(k + 1)));
        big.push(Vertex::y(k));
        let mut cycles = vec![
            Cycle::from_vertices(big, Colour::Red),
            Cycle::edge(Vertex::x(k), Vertex::y(k - 1), Colour::Red),
        ];
        cycles.extend(w.c1.clone());
        Partition::new(cycles)
    } else if z.probe(k + 1, k - 1, "special column back-chord") == Colour::Red {
        let mut big = vec![Vertex::x(k)];
        big.extend(z.interval(Vertex::y(k + 1), Vertex::x(k + 1)));
        big.push(Vertex::y(k - 1));
        let mut cycles = vec![
            Cycle::from_vertices(big, Colour::Red),
            Cycle::edge(Vertex::x(k - 1), Vertex::y(k), Colour::Red),
        ];
        cycles.extend(w.c1.clone());
        Partition::new(cycles)
    } else if z.probe(k, k + 2, "special row skip-chord") == Colour::Red {
        let pair = red_two_cycles_from_chord(z, k, ChordVariant::Row)?;
        Partition::new(vec![pair[0].clone(), pair[1].clone(), w.c2.clone()])
    } else if z.probe(k + 2, k, "special column skip-chord") == Colour::Red {
        let pair = red_two_cycles_from_chord(z, k, ChordVariant::Col)?;
        Partition::new(vec![pair[0].clone(), pair[1].clone(), w.c2.clone()])
    } else {
        // Partition the suffix weakly and splice the witness cycles in
        // through the four blue chords established above.
        let sub = weak_from(z, k + 1)?;
        match sub.condition {
            WeakCondition::TwoCycles => {
                let mut cycles = vec![w.c3.clone()];
                cycles.extend(sub.partition.cycles);
                Partition::new(cycles)
            }
            WeakCondition::ThreeWithDiagonal => {
                let idx = blue_cycle_with_diagonal(&sub.partition, k + 1)?;
                let merged = splice(
                    z,
                    &w.c3,
                    &sub.partition.cycles[idx],
                    Vertex::x(k - 1),
                    Vertex::y(k - 1),
                    Vertex::x(k + 1),
                    Vertex::y(k + 1),
                )?;
                let mut cycles = vec![merged];
                keep_others(&mut cycles, sub.partition, &[idx]);
                Partition::new(cycles)
            }
            WeakCondition::FourWithSplitDiagonals => {
                let idx1 = blue_cycle_with_diagonal(&sub.partition, k + 1)?;
                let idx2 = blue_cycle_with_diagonal(&sub.partition, k + 2)?;
                if idx1 == idx2 {
                    return Err(Error::Internal(
                        "weak partition reported split diagonals on the same cycle".into(),
                    ));
                }
                let merged1 = splice(
                    z,
                    &w.c3,
                    &sub.partition.cycles[idx1],
                    Vertex::x(k - 1),
                    Vertex::y(k - 1),
                    Vertex::x(k + 1),
                    Vertex::y(k + 1),
                )?;
                let merged2 = splice(
                    z,
                    &merged1,
                    &sub.partition.cycles[idx2],
                    Vertex::x(k),
                    Vertex::y(k),
                    Vertex::x(k + 2),
                    Vertex::y(k + 2),
                )?;
                let mut cycles = vec![merged2];
                keep_others(&mut cycles, sub.partition, &[idx1, idx2]);
                Partition::new(cycles)
            }
        }
    };

    if partition.len() > 3 {
        return Err(Error::Internal(format!(
            "special set finish produced {} cycles",
            partition.len()
        )));
    }
    z.check_partition(&partition, "special set finish")?;
    Ok(partition)
}

fn blue_cycle_with_diagonal(p: &Partition, level: u32) -> Result<usize> {
    p.cycles
        .iter()
        .position(|c| {
            c.colour_tag == Some(Colour::Blue)
                && c.has_adjacent_pair(Vertex::x(level), Vertex::y(level))
        })
        .ok_or_else(|| {
            Error::Internal(format!("no blue cycle carries the diagonal edge at level {level}"))
        })
}

fn keep_others(out: &mut Vec<Cycle>, p: Partition, skip: &[usize]) {
    for (i, c) in p.cycles.into_iter().enumerate() {
        if !skip.contains(&i) {
            out.push(c);
        }
    }
}
