//! The probe cascade: once the plait extension finds a red witness edge
//! `x_{k+1} y_j` with `j ≤ k − 1` of the right parity, a bounded sequence
//! of further probes always ends in at most three monochromatic cycles.
//!
//! Probes either close canonical subpaths into red cycles directly, or
//! accumulate enough blue chords to weave blue Hamiltonian cycles of the
//! low levels (through the parity side paths of the plait) and finish via
//! a special-set witness. The frame parameter `alpha` (1 when `k` is
//! even, 2 when odd) names the parity of the witness column; `beta` is
//! the other parity. Column-type witnesses run the same cascade on the
//! transposed view.

use crate::colouring::{Colour, Cycle, Partition, Side, Vertex};
use crate::error::{Error, Result};
use crate::zigzag::plait::{plait_side_path, side_ham_cycle};
use crate::zigzag::special::{replace_edge, special_set_partition, SpecialSetWitness};
use crate::zigzag::{red_cycle_from_path, transpose_partition, ZigzagView};

fn x(i: u32) -> Vertex {
    Vertex::x(i)
}
fn y(i: u32) -> Vertex {
    Vertex::y(i)
}

/// Shared context for one cascade run.
struct Cx<'a, 'v> {
    z: &'v ZigzagView<'a>,
    k: u32,
    alpha: u32,
    beta: u32,
}

impl<'a, 'v> Cx<'a, 'v> {
    fn probe(&self, i: u32, j: u32, ctx: &'static str) -> Colour {
        self.z.probe(i, j, ctx)
    }

    /// A blue side path through one parity side of the first `k` levels.
    fn sp(
        &self,
        parity: u32,
        start: Vertex,
        end: Vertex,
        excl: &[Vertex],
        req: &[(Vertex, Vertex)],
    ) -> Result<Vec<Vertex>> {
        plait_side_path(self.z, self.k, parity, start, end, excl, req)
    }

    /// Close a canonical subpath between two chord ends into a red cycle.
    fn red_closure(&self, a: Vertex, b: Vertex) -> Cycle {
        Cycle::from_vertices(self.z.interval(a, b), Colour::Red)
    }

    /// Uncovered canonical positions split into one long subpath and
    /// isolated stray vertices.
    fn complement_pieces(&self, covered: &[bool]) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
        let mut q: Option<Vec<Vertex>> = None;
        let mut strays = Vec::new();
        let mut run: Vec<Vertex> = Vec::new();
        let mut flush = |run: &mut Vec<Vertex>| -> Result<()> {
            match run.len() {
                0 => {}
                1 => strays.push(run[0]),
                _ => {
                    if q.replace(std::mem::take(run)).is_some() {
                        return Err(Error::Internal(
                            "probe closure left two disconnected subpaths".into(),
                        ));
                    }
                }
            }
            run.clear();
            Ok(())
        };
        for (p, &c) in covered.iter().enumerate() {
            if c {
                flush(&mut run)?;
            } else {
                run.push(self.z.at(p));
            }
        }
        flush(&mut run)?;
        Ok((q.unwrap_or_default(), strays))
    }

    fn covered_by(&self, cycles: &[&[Vertex]]) -> Vec<bool> {
        let mut covered = vec![false; 2 * self.z.m()];
        for c in cycles {
            for &v in *c {
                covered[self.z.pos(v)] = true;
            }
        }
        covered
    }

    /// Fit at most four leftover vertices into a single monochromatic
    /// cycle (singleton, edge, or square).
    fn leftover_cycle(&self, mut vs: Vec<Vertex>) -> Result<Option<Cycle>> {
        vs.sort();
        let (xs, ys): (Vec<Vertex>, Vec<Vertex>) =
            vs.iter().partition(|v| v.side == Side::X);
        match (xs.len(), ys.len()) {
            (0, 0) => Ok(None),
            (1, 0) => Ok(Some(Cycle::singleton(xs[0]))),
            (0, 1) => Ok(Some(Cycle::singleton(ys[0]))),
            (1, 1) => {
                let tag = self.z.edge(xs[0], ys[0]);
                Ok(Some(Cycle::edge(xs[0], ys[0], tag)))
            }
            (2, 2) => {
                for order in [
                    [xs[0], ys[0], xs[1], ys[1]],
                    [xs[0], ys[1], xs[1], ys[0]],
                ] {
                    let tag = self.z.edge(order[0], order[1]);
                    if (0..4).all(|i| self.z.edge(order[i], order[(i + 1) % 4]) == tag) {
                        return Ok(Some(Cycle::from_vertices(order.to_vec(), tag)));
                    }
                }
                Err(Error::Internal("no monochromatic square over the leftover vertices".into()))
            }
            _ => Err(Error::Internal(format!(
                "unexpected leftover shape: {} + {} vertices",
                xs.len(),
                ys.len()
            ))),
        }
    }

    /// Close the subpath of `q` between the red chord ends `a` and `b`
    /// and absorb the rest into one extra cycle.
    fn close_at(
        &self,
        mut base: Vec<Cycle>,
        q: &[Vertex],
        strays: &[Vertex],
        a: Vertex,
        b: Vertex,
    ) -> Result<Partition> {
        let ia = q.iter().position(|&v| v == a);
        let ib = q.iter().position(|&v| v == b);
        let (Some(ia), Some(ib)) = (ia, ib) else {
            return Err(Error::Internal(format!("chord end {a} or {b} missing from subpath")));
        };
        let (lo, hi) = (ia.min(ib), ia.max(ib));
        base.push(Cycle::from_vertices(q[lo..=hi].to_vec(), Colour::Red));
        let mut leftover: Vec<Vertex> = q[..lo].to_vec();
        leftover.extend_from_slice(&q[hi + 1..]);
        leftover.extend_from_slice(strays);
        base.extend(self.leftover_cycle(leftover)?);
        Ok(Partition::new(base))
    }

    /// After a red closure covering everything but `q` and `strays`:
    /// probe the two canonical finishing chords, else fall back to the
    /// always-successful two-level finish.
    fn close_probe_finish(
        &self,
        base: Vec<Cycle>,
        q: Vec<Vertex>,
        strays: Vec<Vertex>,
        l: u32,
    ) -> Result<Partition> {
        let (k, alpha, beta) = (self.k, self.alpha, self.beta);
        if self.probe(alpha, k, "finish chord low") == Colour::Red {
            return self.close_at(base, &q, &strays, x(alpha), y(k));
        }
        if self.probe(k - 1, beta, "finish chord high") == Colour::Red {
            return self.close_at(base, &q, &strays, y(beta), x(k - 1));
        }
        self.two_level_finish(l)
    }

    /// Total fallback given a red `x_{k+1} y_l` and both finishing chords
    /// blue: always produces at most three cycles over the whole view.
    fn two_level_finish(&self, l: u32) -> Result<Partition> {
        let (k, alpha, beta) = (self.k, self.alpha, self.beta);
        if self.probe(k, l, "fallback base chord") == Colour::Red {
            let mut red = vec![x(k)];
            red.extend(self.z.interval(y(k + 1), x(k + 1)));
            red.push(y(l));
            let mut blue = self.sp(beta, y(beta), y(k), &[x(k)], &[])?;
            blue.extend(self.sp(alpha, x(alpha), x(k - 1), &[y(l)], &[])?);
            return Ok(Partition::new(vec![
                Cycle::from_vertices(red, Colour::Red),
                Cycle::from_vertices(blue, Colour::Blue),
            ]));
        }
        if self.probe(k + 1, k - 1, "fallback short chord") == Colour::Red {
            let mut red = vec![x(k)];
            red.extend(self.z.interval(y(k + 1), x(k + 1)));
            red.push(y(k - 1));
            let mut blue = self.sp(beta, y(beta), y(k), &[x(k)], &[])?;
            blue.extend(self.sp(alpha, x(alpha), x(k - 1), &[y(k - 1)], &[])?);
            return Ok(Partition::new(vec![
                Cycle::from_vertices(red, Colour::Red),
                Cycle::from_vertices(blue, Colour::Blue),
            ]));
        }
        // From here on l + 2 ≤ k: had l been k − 1, the short chord above
        // was the red witness itself.
        debug_assert!(l + 2 <= k);
        if self.probe(l + 1, k + 1, "fallback shifted chord") == Colour::Red {
            let mut red = vec![x(l + 1)];
            red.extend(self.z.interval(y(k + 1), x(k + 1)));
            red.push(y(l));
            let mut blue = self.sp(beta, y(beta), y(k), &[x(l + 1)], &[])?;
            blue.extend(self.sp(alpha, x(alpha), x(k - 1), &[y(l)], &[])?);
            return Ok(Partition::new(vec![
                Cycle::from_vertices(red, Colour::Red),
                Cycle::from_vertices(blue, Colour::Blue),
            ]));
        }
        // Blue Hamiltonian cycle of the first k + 1 levels through the
        // shifted chord, pinning the level-k diagonal for later splicing.
        let mut c_mid = vec![x(k + 1), y(k + 1)];
        c_mid.extend(self.sp(beta, x(l + 1), y(beta), &[], &[(x(k), y(k))])?);
        c_mid.extend(self.sp(alpha, x(k - 1), y(k - 1), &[], &[])?);
        let c_mid = Cycle::from_vertices(c_mid, Colour::Blue);
        if self.probe(k + 2, k + 2, "fallback next diagonal") == Colour::Red {
            return Ok(Partition::new(vec![red_cycle_from_path(self.z, k + 2)?, c_mid.clone()]));
        }
        if self.probe(k + 2, k, "fallback drop chord") == Colour::Red {
            let mut red = vec![x(k + 1)];
            red.extend(self.z.interval(y(k + 2), x(k + 2)));
            red.push(y(k));
            let mut blue = self.sp(beta, y(beta), x(k), &[x(l + 1), y(k)], &[])?;
            blue.extend(self.sp(alpha, y(l), x(k - 1), &[], &[])?);
            return Ok(Partition::new(vec![
                Cycle::edge(x(l + 1), y(k + 1), Colour::Blue),
                Cycle::from_vertices(red, Colour::Red),
                Cycle::from_vertices(blue, Colour::Blue),
            ]));
        }
        if self.probe(k, k + 2, "fallback lift chord") == Colour::Red {
            let mut red = vec![x(k)];
            red.extend(self.z.interval(y(k + 2), x(k + 2)));
            red.push(y(k + 1));
            let mut blue = self.sp(beta, y(beta), y(k), &[x(k)], &[])?;
            blue.extend(self.sp(alpha, x(alpha), x(k - 1), &[y(k - 1)], &[])?);
            return Ok(Partition::new(vec![
                Cycle::from_vertices(red, Colour::Red),
                Cycle::edge(x(k + 1), y(k - 1), Colour::Blue),
                Cycle::from_vertices(blue, Colour::Blue),
            ]));
        }
        // Everything probed here came back blue: the first k + 2 levels
        // are a special set.
        let mut c_low = self.sp(beta, y(k), x(k), &[], &[])?;
        c_low.extend(self.sp(alpha, y(l), x(alpha), &[], &[])?);
        let c_low = Cycle::from_vertices(c_low, Colour::Blue);
        let c_high = replace_edge(self.z, &c_mid, x(k), y(k), &[y(k + 2), x(k + 2)])?;
        special_set_partition(
            self.z,
            &SpecialSetWitness { k: k + 2, c1: Some(c_low), c2: c_mid, c3: c_high },
        )
    }

    /// Close the witness chord down to the first level of its parity:
    /// the suffix-plus-backside subpath becomes a red cycle, and the rest
    /// is finished by the finishing chords.
    fn first_level_close(&self) -> Result<Partition> {
        let (k, alpha) = (self.k, self.alpha);
        let cycle1 = self.red_closure(x(k + 1), y(alpha));
        let covered = self.covered_by(&[&cycle1.vertices]);
        let (q, strays) = self.complement_pieces(&covered)?;
        self.close_probe_finish(vec![cycle1], q, strays, alpha)
    }

    /// Pull the witness chord towards the first level of its parity; a
    /// red hit yields a big red cycle whose complement is one subpath
    /// plus strays. Returns `None` when both pulls are blue.
    fn pull_down(&self, j: u32) -> Result<Option<Partition>> {
        let (k, alpha, beta) = (self.k, self.alpha, self.beta);
        if self.probe(j + 1, alpha, "pull row chord") == Colour::Red {
            let seg1 = self.z.interval(x(k + 1), x(j + 1));
            let seg2 = self.z.interval(y(alpha), y(j));
            let covered = self.covered_by(&[&seg1, &seg2]);
            let mut cycle = seg1;
            cycle.extend(seg2);
            let cycle = Cycle::from_vertices(cycle, Colour::Red);
            let (q, strays) = self.complement_pieces(&covered)?;
            return self.close_probe_finish(vec![cycle], q, strays, j).map(Some);
        }
        if self.probe(beta, j + 2, "pull column chord") == Colour::Red {
            let seg1 = self.z.interval(x(k + 1), y(j + 2));
            let seg2 = self.z.interval(x(beta), y(j));
            let covered = self.covered_by(&[&seg1, &seg2]);
            let mut cycle = seg1;
            cycle.extend(seg2);
            let cycle = Cycle::from_vertices(cycle, Colour::Red);
            let (q, strays) = self.complement_pieces(&covered)?;
            return self.close_probe_finish(vec![cycle], q, strays, j).map(Some);
        }
        Ok(None)
    }
}

/// Run the cascade for a red witness `x_{k+1} y_j` on `z` (with `j ≤ k−1`,
/// `j ≡ k+1 (mod 2)`), under a plait of height `k`. Always returns a
/// partition of the whole view into at most three monochromatic cycles.
pub(crate) fn run(z: &ZigzagView, k: u32, j: u32, alpha: u32) -> Result<Partition> {
    let beta = 3 - alpha;
    let cx = Cx { z, k, alpha, beta };
    let m = z.m() as u32;

    // Pull the witness to the first level on either side.
    if cx.probe(k + 1, alpha, "first-level row chord") == Colour::Red {
        return cx.first_level_close();
    }
    if cx.probe(alpha, k + 1, "first-level column chord") == Colour::Red {
        let t = z.transposed();
        let tcx = Cx { z: &t, k, alpha, beta };
        return Ok(transpose_partition(&tcx.first_level_close()?));
    }
    // The diagonal two levels up closes the suffix against the two parity
    // sides extended through level k + 1.
    if cx.probe(k + 2, k + 2, "diagonal k+2") == Colour::Red {
        let mut side = cx.sp(alpha, y(alpha), x(alpha), &[], &[])?;
        side.push(y(k + 1));
        side.push(x(k + 1));
        return Ok(Partition::new(vec![
            red_cycle_from_path(z, k + 2)?,
            side_ham_cycle(k, beta),
            Cycle::from_vertices(side, Colour::Blue),
        ]));
    }
    if j < alpha + 2 {
        return Err(Error::Internal(format!(
            "cascade witness column {j} should have closed at the first level"
        )));
    }

    if let Some(p) = cx.pull_down(j)? {
        return Ok(p);
    }

    if cx.probe(j, k + 2, "suffix row chord") == Colour::Red {
        let mut red = z.interval(x(j), x(k + 1));
        red.extend(z.interval(y(j), y(k + 2)));
        return Ok(Partition::new(vec![
            Cycle::from_vertices(red, Colour::Red),
            side_ham_cycle(j - 1, 1),
            side_ham_cycle(j - 1, 2),
        ]));
    }
    if cx.probe(k + 2, k, "suffix drop chord") == Colour::Red {
        let mut red = vec![x(k + 1)];
        red.extend(z.interval(y(k + 2), x(k + 2)));
        red.push(y(k));
        let red = Cycle::from_vertices(red, Colour::Red);
        if j == k - 1 {
            let mut blue = cx.sp(beta, x(beta), x(k), &[y(k)], &[])?;
            blue.extend(cx.sp(alpha, y(alpha), x(alpha), &[], &[])?);
            blue.push(y(k + 1));
            return Ok(Partition::new(vec![red, Cycle::from_vertices(blue, Colour::Blue)]));
        }
        let mut blue = cx.sp(beta, x(beta), x(j + 1), &[y(k)], &[])?;
        blue.extend(cx.sp(alpha, y(alpha), y(j + 2), &[x(alpha)], &[])?);
        return Ok(Partition::new(vec![
            red,
            Cycle::from_vertices(blue, Colour::Blue),
            Cycle::edge(x(alpha), y(k + 1), Colour::Blue),
        ]));
    }

    // Weave the blue chords gathered so far into a Hamiltonian cycle of
    // the first k levels plus level k + 2, then detour through level k + 1.
    let mut c2 = cx.sp(beta, x(j + 1), y(k), &[], &[])?;
    c2.push(x(k + 2));
    c2.push(y(k + 2));
    c2.extend(cx.sp(alpha, x(j), x(alpha), &[y(alpha)], &[])?);
    c2.push(y(alpha));
    let c2 = Cycle::from_vertices(c2, Colour::Blue);
    let c_prime = replace_edge(z, &c2, x(alpha), y(alpha), &[y(k + 1), x(k + 1)])?;

    if cx.probe(k + 3, k + 3, "diagonal k+3") == Colour::Red {
        return Ok(Partition::new(vec![red_cycle_from_path(z, k + 3)?, c_prime]));
    }

    if cx.probe(j, k + 1, "mirror witness chord") == Colour::Red {
        // The transposed view carries the same witness shape; try the
        // pull-downs there.
        let t = z.transposed();
        let tcx = Cx { z: &t, k, alpha, beta };
        if let Some(p) = tcx.pull_down(j)? {
            return Ok(transpose_partition(&p));
        }
        // Both transposed pulls blue: the mirrored chords complete blue
        // Hamiltonian cycles of the first k and k + 1 levels.
        let (c_low, c_mid) = if j == k - 1 {
            let mut low = cx.sp(beta, y(k), x(k), &[], &[])?;
            low.extend(cx.sp(alpha, y(alpha), x(alpha), &[], &[])?);
            let mut mid = cx.sp(beta, x(beta), y(beta), &[], &[])?;
            mid.push(x(k + 1));
            mid.extend(cx.sp(alpha, y(alpha), x(alpha), &[], &[])?);
            mid.push(y(k + 1));
            (
                Cycle::from_vertices(low, Colour::Blue),
                Cycle::from_vertices(mid, Colour::Blue),
            )
        } else {
            let mut low = cx.sp(beta, x(beta), y(beta), &[], &[])?;
            low.extend(cx.sp(alpha, x(j + 2), y(j + 2), &[], &[(x(alpha), y(alpha))])?);
            let low = Cycle::from_vertices(low, Colour::Blue);
            let mid = replace_edge(z, &low, x(alpha), y(alpha), &[y(k + 1), x(k + 1)])?;
            (low, mid)
        };
        return special_set_partition(
            z,
            &SpecialSetWitness { k: k + 2, c1: Some(c_low), c2: c_mid, c3: c_prime },
        );
    }

    // Blue cycle over the first k + 1 levels minus x_{k+1} and y_k,
    // reused by several of the remaining branches.
    let d_cycle = if j == k - 1 {
        let mut d = cx.sp(beta, x(beta), x(k), &[y(k)], &[])?;
        d.extend(cx.sp(alpha, y(alpha), x(alpha), &[], &[])?);
        d.push(y(k + 1));
        Cycle::from_vertices(d, Colour::Blue)
    } else {
        let mut d = cx.sp(beta, x(beta), x(j + 1), &[y(k)], &[])?;
        d.extend(cx.sp(alpha, y(alpha), x(alpha), &[x(j), y(j + 2)], &[])?);
        d.push(y(k + 1));
        d.push(x(j));
        d.push(y(j + 2));
        Cycle::from_vertices(d, Colour::Blue)
    };

    if cx.probe(k + 1, k + 3, "suffix lift chord") == Colour::Red {
        let mut red = vec![x(k + 1)];
        red.extend(z.interval(y(k + 3), x(k + 3)));
        red.push(y(k + 2));
        return Ok(Partition::new(vec![
            Cycle::from_vertices(red, Colour::Red),
            Cycle::edge(x(k + 2), y(k), Colour::Blue),
            d_cycle,
        ]));
    }

    let low_chord_red = cx.probe(alpha, k, "low finish chord") == Colour::Red;
    let mid_chord_red = cx.probe(k + 1, beta, "mid finish chord") == Colour::Red;
    if !low_chord_red && !mid_chord_red {
        let mut c_low = cx.sp(beta, x(j + 1), y(k), &[], &[])?;
        c_low.extend(cx.sp(alpha, x(alpha), y(alpha), &[], &[])?);
        let mut c_mid = cx.sp(beta, x(j + 1), y(beta), &[], &[])?;
        c_mid.push(x(k + 1));
        c_mid.push(y(k + 1));
        c_mid.extend(cx.sp(alpha, x(alpha), y(alpha), &[], &[])?);
        return special_set_partition(
            z,
            &SpecialSetWitness {
                k: k + 2,
                c1: Some(Cycle::from_vertices(c_low, Colour::Blue)),
                c2: Cycle::from_vertices(c_mid, Colour::Blue),
                c3: c_prime,
            },
        );
    }

    if cx.probe(beta, k + 2, "cross closure chord") == Colour::Red {
        let cycle1 = cx.red_closure(x(beta), y(k + 2));
        let covered = cx.covered_by(&[&cycle1.vertices]);
        let (q, strays) = cx.complement_pieces(&covered)?;
        let (a, b) = if low_chord_red { (x(alpha), y(k)) } else { (x(k + 1), y(beta)) };
        return cx.close_at(vec![cycle1], &q, &strays, a, b);
    }

    if cx.probe(k + 3, k + 1, "suffix drop chord high") == Colour::Red {
        let mut blue = cx.sp(beta, x(j + 1), x(beta), &[y(k)], &[])?;
        blue.push(y(k + 2));
        blue.extend(cx.sp(alpha, x(j), y(alpha), &[], &[])?);
        let mut red = vec![x(k + 2)];
        red.extend(z.interval(y(k + 3), x(k + 3)));
        red.push(y(k + 1));
        return Ok(Partition::new(vec![
            Cycle::from_vertices(blue, Colour::Blue),
            Cycle::from_vertices(red, Colour::Red),
            Cycle::edge(x(k + 1), y(k), Colour::Red),
        ]));
    }

    let e3 = replace_edge(z, &c_prime, x(k + 1), y(k + 1), &[y(k + 3), x(k + 3)])?;
    if cx.probe(k + 4, k + 4, "diagonal k+4") == Colour::Red {
        return Ok(Partition::new(vec![red_cycle_from_path(z, k + 4)?, e3]));
    }

    if cx.probe(k + 4, k, "deep drop chord") == Colour::Red {
        let mut red = vec![x(k + 1), y(k + 2), x(k + 3)];
        red.extend(z.interval(y(k + 4), x(k + 4)));
        red.push(y(k));
        return Ok(Partition::new(vec![
            Cycle::from_vertices(red, Colour::Red),
            Cycle::edge(x(k + 2), y(k + 3), Colour::Red),
            d_cycle,
        ]));
    }
    if cx.probe(k + 2, k + 4, "deep lift chord") == Colour::Red {
        let mut blue = cx.sp(beta, x(j + 1), x(beta), &[y(k)], &[])?;
        blue.push(y(k + 2));
        blue.extend(cx.sp(alpha, x(j), x(alpha), &[y(alpha)], &[])?);
        blue.push(y(k + 1));
        blue.push(x(k + 1));
        blue.push(y(alpha));
        let mut red = vec![x(k + 2)];
        red.extend(z.interval(y(k + 4), x(k + 4)));
        red.push(y(k + 3));
        let tag = z.edge(x(k + 3), y(k));
        return Ok(Partition::new(vec![
            Cycle::from_vertices(blue, Colour::Blue),
            Cycle::from_vertices(red, Colour::Red),
            Cycle::edge(x(k + 3), y(k), tag),
        ]));
    }

    let e4 = replace_edge(z, &e3, x(k + 2), y(k), &[y(k + 4), x(k + 4)])?;
    let _ = m;
    special_set_partition(
        z,
        &SpecialSetWitness { k: k + 4, c1: Some(c_prime), c2: e3, c3: e4 },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{Colouring, MonoPath};
    use crate::gen::SplitMix64;
    use crate::trace;
    use crate::verify::verify_partition_on;
    use crate::zigzag::plait::partition_three;
    use crate::zigzag::{canonical_path, zigzag_labelling};

    /// A random board whose canonical path is forced red.
    fn random_zigzag_board(m: usize, rng: &mut SplitMix64) -> Colouring {
        let path = canonical_path(m);
        let mut on_path = vec![vec![false; m + 1]; m + 1];
        for w in path.windows(2) {
            let (a, b) = (w[0], w[1]);
            let (i, j) = if a.side == Side::X {
                (a.index as usize, b.index as usize)
            } else {
                (b.index as usize, a.index as usize)
            };
            on_path[i][j] = true;
        }
        Colouring::from_fn(m, |i, j| {
            if on_path[i as usize][j as usize] || rng.next_u64().is_multiple_of(2) {
                Colour::Red
            } else {
                Colour::Blue
            }
        })
    }

    #[test]
    fn random_views_partition_into_three() {
        let mut rng = SplitMix64::new(0x5eed_cafe);
        for m in [6usize, 7, 8, 9, 10] {
            for _ in 0..400 {
                let c = random_zigzag_board(m, &mut rng);
                let ham = MonoPath::new(canonical_path(m), Colour::Red);
                let z = zigzag_labelling(&c, &ham).unwrap();
                let p = partition_three(&z).unwrap();
                assert!(p.len() <= 3, "m={m}: {} cycles", p.len());
                let report = verify_partition_on(z.view(), &p);
                assert!(report.valid, "m={m}: {:?}", report.failure);
            }
        }
    }

    #[test]
    fn sparse_red_views_exercise_deep_branches() {
        // Mostly blue boards walk far down the cascade before finishing.
        let mut rng = SplitMix64::new(7);
        for m in [8usize, 10, 12] {
            for _ in 0..300 {
                let path = canonical_path(m);
                let mut on_path = vec![vec![false; m + 1]; m + 1];
                for w in path.windows(2) {
                    let (a, b) = (w[0], w[1]);
                    let (i, j) = if a.side == Side::X {
                        (a.index as usize, b.index as usize)
                    } else {
                        (b.index as usize, a.index as usize)
                    };
                    on_path[i][j] = true;
                }
                let c = Colouring::from_fn(m, |i, j| {
                    if on_path[i as usize][j as usize] || rng.next_u64().is_multiple_of(8) {
                        Colour::Red
                    } else {
                        Colour::Blue
                    }
                });
                let ham = MonoPath::new(canonical_path(m), Colour::Red);
                let z = zigzag_labelling(&c, &ham).unwrap();
                let p = partition_three(&z).unwrap();
                assert!(p.len() <= 3);
            }
        }
    }

    #[test]
    fn probe_traces_are_consistent() {
        let mut rng = SplitMix64::new(99);
        for _ in 0..200 {
            let c = random_zigzag_board(9, &mut rng);
            let ham = MonoPath::new(canonical_path(9), Colour::Red);
            let z = zigzag_labelling(&c, &ham).unwrap();
            trace::enable();
            let _ = partition_three(&z).unwrap();
            let events = trace::take();
            assert!(trace::find_contradiction(&events).is_none());
        }
    }
}
