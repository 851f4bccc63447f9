//! Exact minimum monochromatic-cycle-partition computation for small `n`
//! by exhaustive search: the independent ground truth for property tests.
//!
//! The search memoizes over pairs of uncovered-vertex bitmasks, branching
//! on the lowest uncovered vertex and enumerating every monochromatic cycle
//! through it (singletons and single edges included). Costs are exponential;
//! the default size cap is [`DEFAULT_ORACLE_LIMIT`] and raising it is an
//! explicit acknowledgment by the caller.

use crate::colouring::{Colour, Colouring, Cycle, Partition, Vertex};
use crate::error::{Error, Result};
use crate::verify::verify_partition;
use std::collections::HashMap;

/// Default size cap for the exact oracle.
pub const DEFAULT_ORACLE_LIMIT: usize = 6;

/// Hard ceiling: masks are 64-bit per class and costs explode far earlier.
const HARD_LIMIT: usize = 16;

/// An exact optimum with a witness achieving it.
#[derive(Debug, Clone)]
pub struct OracleResult {
    pub minimum: usize,
    pub witness: Partition,
}

fn check_limit(n: usize, limit: usize) -> Result<()> {
    let limit = limit.min(HARD_LIMIT);
    if n > limit {
        return Err(Error::OracleLimit { n, limit });
    }
    Ok(())
}

/// Find a monochromatic cycle of the given colour spanning exactly
/// `xs ∪ ys`, if one exists. A singleton pair yields an edge-cycle when the
/// edge has the right colour. Backtracking search.
pub fn mono_hamiltonian_cycle_on(
    c: &Colouring,
    xs: &[u32],
    ys: &[u32],
    colour: Colour,
) -> Result<Option<Cycle>> {
    if xs.is_empty() || xs.len() != ys.len() {
        return Err(Error::Unbalanced(format!("|xs|={}, |ys|={}", xs.len(), ys.len())));
    }
    if xs.len() == 1 {
        return Ok(if c.colour(xs[0], ys[0]) == colour {
            Some(Cycle::edge(Vertex::x(xs[0]), Vertex::y(ys[0]), colour))
        } else {
            None
        });
    }
    // Fix the start at xs[0]; extend alternately through unused ys/xs.
    let k = xs.len();
    let mut used_x = vec![false; k];
    let mut used_y = vec![false; k];
    used_x[0] = true;
    let mut seq: Vec<Vertex> = vec![Vertex::x(xs[0])];
    fn extend(
        c: &Colouring,
        xs: &[u32],
        ys: &[u32],
        colour: Colour,
        seq: &mut Vec<Vertex>,
        used_x: &mut [bool],
        used_y: &mut [bool],
    ) -> bool {
        let k = xs.len();
        if seq.len() == 2 * k {
            // Close back to xs[0].
            let last = *seq.last().unwrap();
            return c.colour(xs[0], last.index) == colour;
        }
        let last = *seq.last().unwrap();
        if seq.len() % 2 == 1 {
            // Pick an unused y adjacent to the last x in the right colour.
            for t in 0..k {
                if !used_y[t] && c.colour(last.index, ys[t]) == colour {
                    used_y[t] = true;
                    seq.push(Vertex::y(ys[t]));
                    if extend(c, xs, ys, colour, seq, used_x, used_y) {
                        return true;
                    }
                    seq.pop();
                    used_y[t] = false;
                }
            }
        } else {
            for t in 1..k {
                if !used_x[t] && c.colour(xs[t], last.index) == colour {
                    used_x[t] = true;
                    seq.push(Vertex::x(xs[t]));
                    if extend(c, xs, ys, colour, seq, used_x, used_y) {
                        return true;
                    }
                    seq.pop();
                    used_x[t] = false;
                }
            }
        }
        false
    }
    Ok(if extend(c, xs, ys, colour, &mut seq, &mut used_x, &mut used_y) {
        Some(Cycle::proper(seq, colour))
    } else {
        None
    })
}

struct Search<'a> {
    c: &'a Colouring,
    n: usize,
    /// (x-mask, y-mask) of *uncovered* vertices ↦ (minimum, first cycle).
    memo: HashMap<(u64, u64), (usize, Option<Cycle>)>,
}

impl Search<'_> {
    /// Enumerate monochromatic cycles through the pivot and recurse.
    fn best(&mut self, xm: u64, ym: u64) -> (usize, Option<Cycle>) {
        if xm == 0 && ym == 0 {
            return (0, None);
        }
        if let Some(hit) = self.memo.get(&(xm, ym)) {
            return hit.clone();
        }
        let mut best = (usize::MAX, None);
        if xm == 0 || ym == 0 {
            // Only singletons remain on one side.
            let (mask, side) = if xm == 0 { (ym, false) } else { (xm, true) };
            let count = mask.count_ones() as usize;
            let lo = mask.trailing_zeros() + 1;
            let v = if side { Vertex::x(lo) } else { Vertex::y(lo) };
            best = (count, Some(Cycle::singleton(v)));
            self.memo.insert((xm, ym), best.clone());
            return best;
        }
        // Pivot: lowest uncovered X vertex (both masks nonzero here).
        let pivot = xm.trailing_zeros() + 1;
        // Proper/edge cycles through the pivot: alternating DFS, colour set
        // by the first edge, closing when back at the pivot; orientation is
        // deduplicated by requiring the first Y index below the last.
        let mut seq_x: Vec<u32> = vec![pivot];
        let mut seq_y: Vec<u32> = Vec::new();
        self.cycles_through(xm & !(1 << (pivot - 1)), ym, Colour::Red, &mut seq_x, &mut seq_y, &mut best);
        self.cycles_through(xm & !(1 << (pivot - 1)), ym, Colour::Blue, &mut seq_x, &mut seq_y, &mut best);
        // Singleton pivot, tried last. A nonempty state needs at least one
        // cycle, so a count of 1 is already optimal.
        if best.0 > 1 {
            let (sub, _) = self.best(xm & !(1 << (pivot - 1)), ym);
            if sub != usize::MAX && sub + 1 < best.0 {
                best = (sub + 1, Some(Cycle::singleton(Vertex::x(pivot))));
            }
        }
        self.memo.insert((xm, ym), best.clone());
        best
    }

    /// DFS over cycles of one colour through `seq_x[0]`, updating `best`.
    /// `xm`/`ym` exclude everything already in the sequence.
    fn cycles_through(
        &mut self,
        xm: u64,
        ym: u64,
        colour: Colour,
        seq_x: &mut Vec<u32>,
        seq_y: &mut Vec<u32>,
        best: &mut (usize, Option<Cycle>),
    ) {
        if best.0 == 1 {
            return;
        }
        let pivot = seq_x[0];
        // Try to close the cycle: needs equal counts and a matching edge.
        if seq_y.len() == seq_x.len()
            && self.c.colour(pivot, *seq_y.last().unwrap()) == colour
            && (seq_y.len() == 1 || seq_y[0] < *seq_y.last().unwrap())
        {
            let (sub, _) = self.best(xm, ym);
            if sub != usize::MAX && sub + 1 < best.0 {
                let mut vertices = Vec::with_capacity(2 * seq_x.len());
                for (i, &x) in seq_x.iter().enumerate() {
                    vertices.push(Vertex::x(x));
                    vertices.push(Vertex::y(seq_y[i]));
                }
                *best = (sub + 1, Some(Cycle::from_vertices(vertices, colour)));
            }
        }
        if seq_y.len() == seq_x.len() {
            // Extend with an X vertex.
            let last_y = *seq_y.last().unwrap();
            for i in 1..=self.n as u32 {
                if xm >> (i - 1) & 1 == 1 && self.c.colour(i, last_y) == colour {
                    seq_x.push(i);
                    self.cycles_through(xm & !(1 << (i - 1)), ym, colour, seq_x, seq_y, best);
                    seq_x.pop();
                }
            }
        } else {
            // Extend with a Y vertex.
            let last_x = *seq_x.last().unwrap();
            for j in 1..=self.n as u32 {
                if ym >> (j - 1) & 1 == 1 && self.c.colour(last_x, j) == colour {
                    seq_y.push(j);
                    self.cycles_through(xm, ym & !(1 << (j - 1)), colour, seq_x, seq_y, best);
                    seq_y.pop();
                }
            }
        }
    }
}

/// Exact minimum number of monochromatic cycles partitioning all vertices,
/// with a witness. Refuses `n > limit`.
pub fn min_cycle_partition(c: &Colouring, limit: usize) -> Result<OracleResult> {
    check_limit(c.n(), limit)?;
    let n = c.n();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut s = Search { c, n, memo: HashMap::new() };
    let mut xm = full;
    let mut ym = full;
    let mut cycles = Vec::new();
    let (minimum, _) = s.best(xm, ym);
    debug_assert_ne!(minimum, usize::MAX);
    // Reconstruct by following the memoized first-cycle choices.
    while xm != 0 || ym != 0 {
        let (_, choice) = s.best(xm, ym);
        let cy = choice.expect("nonempty state must have a chosen cycle");
        for v in &cy.vertices {
            match v.side {
                crate::colouring::Side::X => xm &= !(1 << (v.index - 1)),
                crate::colouring::Side::Y => ym &= !(1 << (v.index - 1)),
            }
        }
        cycles.push(cy);
    }
    let witness = Partition::new(cycles);
    debug_assert_eq!(witness.len(), minimum);
    debug_assert!(verify_partition(c, &witness).valid);
    Ok(OracleResult { minimum, witness })
}

/// [`min_cycle_partition`] with the default size cap.
pub fn min_cycle_partition_default(c: &Colouring) -> Result<OracleResult> {
    min_cycle_partition(c, DEFAULT_ORACLE_LIMIT)
}

/// Does some verifying 2-cycle partition use one red-tagged and one
/// blue-tagged cycle? Singletons count as matching either colour.
pub fn exists_two_cycle_bicolour_partition(c: &Colouring, limit: usize) -> Result<bool> {
    check_limit(c.n(), limit)?;
    let n = c.n() as u32;
    // A group can host a "cycle matching colour t" iff it is a lone vertex
    // (singleton, matches either) or balanced with a spanning mono cycle.
    let group_matches = |xs: &[u32], ys: &[u32], colour: Colour| -> bool {
        match (xs.len(), ys.len()) {
            (1, 0) | (0, 1) => true,
            (a, b) if a == b && a >= 1 => {
                mono_hamiltonian_cycle_on(c, xs, ys, colour).unwrap().is_some()
            }
            _ => false,
        }
    };
    for xa in 0u64..(1 << n) {
        for ya in 0u64..(1 << n) {
            let pick = |mask: u64| -> Vec<u32> {
                (1..=n).filter(|&i| mask >> (i - 1) & 1 == 1).collect()
            };
            let (xs_a, ys_a) = (pick(xa), pick(ya));
            let (xs_b, ys_b) = (pick(!xa & ((1 << n) - 1)), pick(!ya & ((1 << n) - 1)));
            if xs_a.len() + ys_a.len() == 0 || xs_b.len() + ys_b.len() == 0 {
                continue;
            }
            if (group_matches(&xs_a, &ys_a, Colour::Red) && group_matches(&xs_b, &ys_b, Colour::Blue))
                || (group_matches(&xs_a, &ys_a, Colour::Blue)
                    && group_matches(&xs_b, &ys_b, Colour::Red))
            {
                return Ok(true);
            }
        }
    }
    Ok(false)
}
