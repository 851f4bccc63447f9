//! Partitioning a balanced board that carries a monochromatic Hamiltonian
//! path into at most three monochromatic cycles.
//!
//! The central object is the [`ZigzagView`]: a relabelling of the board so
//! that the canonical zigzag path `P = (x_1, y_2, x_3, y_4, …, x_4, y_3,
//! x_2, y_1)` is entirely red. Every restriction of `P` to the suffix
//! levels `S_{≥i}` is then a red Hamiltonian path of that suffix with
//! endpoints `x_i` and `y_i`, which powers all the cycle constructions in
//! this module: direct closures of `P`-subpaths, the weak ≤4 recursion,
//! blue special sets with cycle splicing, and the even-plait induction
//! with its probe cascade.

mod cascade;
mod plait;
mod special;
mod weak;

pub use plait::{
    establish_base_plait, extend_plait, partition_three, plait_side_path, PlaitState, PlaitStep,
};
pub use special::{special_set_partition, splice, SpecialSetWitness};
pub use weak::{weak_partition, WeakCondition, WeakResult};

use crate::colouring::{Colour, Colouring, ColouringView, Cycle, MonoPath, Partition, Side, Vertex};
use crate::error::{Error, Result};
use crate::trace;
use crate::verify::verify_partition_on;

/// A balanced view relabelled so the canonical zigzag path is red.
#[derive(Clone)]
pub struct ZigzagView<'a> {
    view: ColouringView<'a>,
    m: usize,
}

/// The canonical zigzag path in label coordinates for `m` levels:
/// ascending odd-level/even-level alternation out, descending back.
pub fn canonical_path(m: usize) -> Vec<Vertex> {
    let mut fwd = Vec::new();
    let mut back = Vec::new();
    for i in 1..=m as u32 {
        if i % 2 == 1 {
            fwd.push(Vertex::x(i));
            back.push(Vertex::y(i));
        } else {
            fwd.push(Vertex::y(i));
            back.push(Vertex::x(i));
        }
    }
    back.reverse();
    fwd.extend(back);
    fwd
}

impl<'a> ZigzagView<'a> {
    /// Wrap a view after checking that the canonical path is red.
    pub fn new(view: ColouringView<'a>) -> Result<Self> {
        let m = view.m();
        let z = ZigzagView { view, m };
        for w in canonical_path(m).windows(2) {
            if z.edge(w[0], w[1]) != Colour::Red {
                return Err(Error::Internal(format!(
                    "canonical path edge {}–{} is not red in the view",
                    w[0], w[1]
                )));
            }
        }
        Ok(z)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn view(&self) -> &ColouringView<'a> {
        &self.view
    }

    /// Label-space colour lookup without trace recording.
    pub fn colour(&self, i: u32, j: u32) -> Colour {
        self.view.colour(i, j)
    }

    /// Colour of the edge between two label-space vertices.
    pub fn edge(&self, a: Vertex, b: Vertex) -> Colour {
        debug_assert_ne!(a.side, b.side);
        let (i, j) = if a.side == Side::X { (a.index, b.index) } else { (b.index, a.index) };
        self.colour(i, j)
    }

    /// Traced probe: records the base-board edge and colour.
    pub fn probe(&self, i: u32, j: u32, context: &'static str) -> Colour {
        let colour = self.colour(i, j);
        let bx = self.view.translate_vertex(Vertex::x(i));
        let by = self.view.translate_vertex(Vertex::y(j));
        let (bi, bj) = if bx.side == Side::X { (bx.index, by.index) } else { (by.index, bx.index) };
        let base_colour = if self.view.flipped() { colour.complement() } else { colour };
        trace::record(bi, bj, base_colour, context);
        colour
    }

    /// The class-swapped view: also a valid zigzag with the same labels,
    /// because the canonical path maps to its own reversal.
    pub fn transposed(&self) -> ZigzagView<'a> {
        ZigzagView { view: self.view.transposed(), m: self.m }
    }

    /// Position of a labelled vertex along the canonical path.
    pub fn pos(&self, v: Vertex) -> usize {
        let m = self.m;
        let i = v.index as usize;
        match v.side {
            Side::X => {
                if i % 2 == 1 {
                    i - 1
                } else {
                    2 * m - i
                }
            }
            Side::Y => {
                if i.is_multiple_of(2) {
                    i - 1
                } else {
                    2 * m - i
                }
            }
        }
    }

    /// Vertex at a canonical-path position.
    pub fn at(&self, p: usize) -> Vertex {
        let m = self.m;
        debug_assert!(p < 2 * m);
        // Invert the position formula: the first half follows ascending
        // levels, the second half descends.
        if p < m {
            let i = p + 1;
            if i % 2 == 1 {
                Vertex::x(i as u32)
            } else {
                Vertex::y(i as u32)
            }
        } else {
            let i = 2 * m - p;
            if i % 2 == 1 {
                Vertex::y(i as u32)
            } else {
                Vertex::x(i as u32)
            }
        }
    }

    /// The inclusive canonical subpath from `a` to `b` (red by the zigzag
    /// invariant), walked in the direction from `a` towards `b`.
    pub fn interval(&self, a: Vertex, b: Vertex) -> Vec<Vertex> {
        let pa = self.pos(a);
        let pb = self.pos(b);
        if pa <= pb {
            (pa..=pb).map(|p| self.at(p)).collect()
        } else {
            (pb..=pa).rev().map(|p| self.at(p)).collect()
        }
    }

    /// Translate a partition from label space to base coordinates.
    pub fn translate_partition(&self, p: &Partition) -> Partition {
        self.view.translate_partition(p)
    }

    /// Validate a label-space partition against the view.
    pub fn check_partition(&self, p: &Partition, what: &str) -> Result<()> {
        let report = verify_partition_on(&self.view, p);
        if !report.valid {
            return Err(Error::Internal(format!(
                "{what}: constructed partition is invalid: {}",
                report.failure.unwrap_or_default()
            )));
        }
        Ok(())
    }
}

/// Map a label-space partition produced on the transposed view back.
pub(crate) fn transpose_partition(p: &Partition) -> Partition {
    Partition::new(
        p.cycles
            .iter()
            .map(|c| Cycle {
                vertices: c.vertices.iter().map(|v| v.transposed()).collect(),
                kind: c.kind,
                colour_tag: c.colour_tag,
            })
            .collect(),
    )
}

/// Relabel a board along a monochromatic Hamiltonian path so the canonical
/// zigzag path comes out red. The path's endpoints become level 1 (its
/// X-side endpoint is `x_1`), the interior endpoints level 2, and so on;
/// the view is colour-flipped when the path is blue.
pub fn zigzag_labelling<'a>(c: &'a Colouring, ham: &MonoPath) -> Result<ZigzagView<'a>> {
    if ham.len() < 2 || !ham.len().is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "zigzag labelling needs an even path of at least 2 vertices, got {}",
            ham.len()
        )));
    }
    let m = ham.len() / 2;
    let colour = ham
        .colour_tag
        .ok_or_else(|| Error::Precondition("the Hamiltonian path must carry a colour tag".into()))?;
    // Check the path is monochromatic on the base board.
    for w in ham.vertices.windows(2) {
        let (a, b) = (w[0], w[1]);
        if a.side == b.side {
            return Err(Error::Precondition(format!(
                "path vertices {a} and {b} lie in the same class"
            )));
        }
        let (i, j) = if a.side == Side::X { (a.index, b.index) } else { (b.index, a.index) };
        if c.edge_colour(i, j)? != colour {
            return Err(Error::Precondition(format!("path edge {a}–{b} is not {colour}")));
        }
    }
    let mut xs = vec![0u32; m];
    let mut ys = vec![0u32; m];
    for level in 0..m {
        let (a, b) = (ham.vertices[level], ham.vertices[ham.vertices.len() - 1 - level]);
        if a.side == b.side {
            return Err(Error::Precondition("path endpoints lie in the same class".into()));
        }
        let (xv, yv) = if a.side == Side::X { (a, b) } else { (b, a) };
        xs[level] = xv.index;
        ys[level] = yv.index;
    }
    let view = ColouringView::new(c, xs, ys, colour == Colour::Blue)?;
    ZigzagView::new(view)
}

/// The red Hamiltonian cycle of the suffix `S_{≥i}`: the canonical subpath
/// closed by the (red) edge `x_i y_i`.
pub fn red_cycle_from_path(z: &ZigzagView, i: u32) -> Result<Cycle> {
    if i == 0 || i as usize > z.m() {
        return Err(Error::OutOfRange(format!("level {i} outside 1..={}", z.m())));
    }
    if z.colour(i, i) != Colour::Red {
        return Err(Error::Precondition(format!("edge x{i}y{i} is not red")));
    }
    let vertices = z.interval(Vertex::x(i), Vertex::y(i));
    Ok(Cycle::from_vertices(vertices, Colour::Red))
}

/// Which diagonal-skipping chord drives the two-red-cycle construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChordVariant {
    /// `x_i y_{i+2}` is red.
    Row,
    /// `x_{i+2} y_i` is red.
    Col,
}

/// Two red cycles covering the suffix `S_{≥i}`, built from a red chord two
/// levels ahead: a long cycle around the suffix plus one red edge-cycle.
pub fn red_two_cycles_from_chord(z: &ZigzagView, i: u32, variant: ChordVariant) -> Result<[Cycle; 2]> {
    let m = z.m() as u32;
    if i == 0 || i + 2 > m {
        return Err(Error::OutOfRange(format!("level {i}+2 outside 1..={m}")));
    }
    let chord_red = match variant {
        ChordVariant::Row => z.colour(i, i + 2) == Colour::Red,
        ChordVariant::Col => z.colour(i + 2, i) == Colour::Red,
    };
    if !chord_red {
        return Err(Error::Precondition(format!("the level-{i} chord is not red")));
    }
    let inner = z.interval(Vertex::y(i + 2), Vertex::x(i + 2));
    let (mut big, edge) = match variant {
        ChordVariant::Row => {
            (vec![Vertex::x(i)], Cycle::edge(Vertex::x(i + 1), Vertex::y(i), Colour::Red))
        }
        ChordVariant::Col => {
            (vec![Vertex::x(i + 1)], Cycle::edge(Vertex::x(i), Vertex::y(i + 1), Colour::Red))
        }
    };
    big.extend(inner);
    big.push(match variant {
        ChordVariant::Row => Vertex::y(i + 1),
        ChordVariant::Col => Vertex::y(i),
    });
    Ok([Cycle::from_vertices(big, Colour::Red), edge])
}

#[cfg(test)]
pub(crate) mod testutil {
    use super::*;

    /// A board whose red edges are exactly the canonical path edges.
    pub fn sparse_board(m: usize) -> Colouring {
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
            if on_path[i as usize][j as usize] {
                Colour::Red
            } else {
                Colour::Blue
            }
        })
    }

    /// The identity zigzag labelling along the canonical path.
    pub fn zig(c: &Colouring) -> ZigzagView<'_> {
        let ham = MonoPath::new(canonical_path(c.n()), Colour::Red);
        zigzag_labelling(c, &ham).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::build_colouring;
    use crate::gen::gen_proposition7;

    fn all_red(n: usize) -> Colouring {
        Colouring::from_fn(n, |_, _| Colour::Red)
    }

    fn identity_zigzag(c: &Colouring) -> ZigzagView<'_> {
        let ham = MonoPath::new(canonical_path(c.n()), Colour::Red);
        zigzag_labelling(c, &ham).unwrap()
    }

    #[test]
    fn positions_invert() {
        let c = all_red(5);
        let z = identity_zigzag(&c);
        for p in 0..10 {
            assert_eq!(z.pos(z.at(p)), p);
        }
        assert_eq!(z.at(0), Vertex::x(1));
        assert_eq!(z.at(9), Vertex::y(1));
        let path = canonical_path(5);
        for (p, &v) in path.iter().enumerate() {
            assert_eq!(z.at(p), v);
        }
    }

    #[test]
    fn suffix_paths_are_red_hamiltonian() {
        let c = gen_proposition7(4).unwrap();
        let ham = MonoPath::new(canonical_path(4), Colour::Red);
        let z = zigzag_labelling(&c, &ham).unwrap();
        for i in 1..=4u32 {
            let seg = z.interval(Vertex::x(i), Vertex::y(i));
            assert_eq!(seg.len(), 2 * (4 - i as usize + 1));
            assert_eq!(seg[0], Vertex::x(i));
            assert_eq!(*seg.last().unwrap(), Vertex::y(i));
            for w in seg.windows(2) {
                assert_eq!(z.edge(w[0], w[1]), Colour::Red);
            }
        }
    }

    #[test]
    fn labelling_peels_endpoints() {
        let c = all_red(2);
        let ham = MonoPath::new(
            vec![Vertex::x(1), Vertex::y(1), Vertex::x(2), Vertex::y(2)],
            Colour::Red,
        );
        let z = zigzag_labelling(&c, &ham).unwrap();
        // x_1 := x1, y_1 := y2, x_2 := x2, y_2 := y1.
        assert_eq!(z.view().translate_vertex(Vertex::x(1)), Vertex::x(1));
        assert_eq!(z.view().translate_vertex(Vertex::y(1)), Vertex::y(2));
        assert_eq!(z.view().translate_vertex(Vertex::x(2)), Vertex::x(2));
        assert_eq!(z.view().translate_vertex(Vertex::y(2)), Vertex::y(1));
        assert!(!z.view().flipped());
    }

    #[test]
    fn blue_path_flips_view() {
        let c = Colouring::from_fn(2, |_, _| Colour::Blue);
        let ham = MonoPath::new(
            vec![Vertex::x(1), Vertex::y(1), Vertex::x(2), Vertex::y(2)],
            Colour::Blue,
        );
        let z = zigzag_labelling(&c, &ham).unwrap();
        assert!(z.view().flipped());
        assert_eq!(z.colour(1, 1), Colour::Red);
    }

    #[test]
    fn labelling_rejects_bad_paths() {
        let c = all_red(2);
        let bad = MonoPath::new(
            vec![Vertex::x(1), Vertex::y(1), Vertex::x(2), Vertex::y(2)],
            Colour::Blue,
        );
        assert!(zigzag_labelling(&c, &bad).is_err());
        let odd = MonoPath::new(vec![Vertex::x(1)], Colour::Red);
        assert!(zigzag_labelling(&c, &odd).is_err());
    }

    #[test]
    fn suffix_cycle_construction() {
        let c = all_red(3);
        let z = identity_zigzag(&c);
        let full = red_cycle_from_path(&z, 1).unwrap();
        assert_eq!(full.len(), 6);
        let top = red_cycle_from_path(&z, 3).unwrap();
        assert_eq!(top.kind, crate::colouring::CycleKind::EdgeCycle);
        assert!(red_cycle_from_path(&z, 4).is_err());
        let blue_diag = build_colouring(2, &["BR", "RR"]).unwrap();
        let ham = MonoPath::new(canonical_path(2), Colour::Red);
        let zb = zigzag_labelling(&blue_diag, &ham).unwrap();
        assert!(red_cycle_from_path(&zb, 1).is_err());
    }

    #[test]
    fn chord_pair_construction() {
        let c = all_red(3);
        let z = identity_zigzag(&c);
        let [big, edge] = red_two_cycles_from_chord(&z, 1, ChordVariant::Row).unwrap();
        assert_eq!(big.vertices, vec![Vertex::x(1), Vertex::y(3), Vertex::x(3), Vertex::y(2)]);
        assert_eq!(edge.vertices, vec![Vertex::x(2), Vertex::y(1)]);
        let [big2, edge2] = red_two_cycles_from_chord(&z, 1, ChordVariant::Col).unwrap();
        assert_eq!(big2.vertices, vec![Vertex::x(2), Vertex::y(3), Vertex::x(3), Vertex::y(1)]);
        assert_eq!(edge2.vertices, vec![Vertex::x(1), Vertex::y(2)]);
        let p = Partition::new(vec![big, edge]);
        z.check_partition(&p, "chord pair").unwrap();
    }

    #[test]
    fn transposed_view_is_zigzag() {
        let c = gen_proposition7(5).unwrap();
        let ham = MonoPath::new(canonical_path(5), Colour::Red);
        let z = zigzag_labelling(&c, &ham).unwrap();
        let t = z.transposed();
        for w in canonical_path(5).windows(2) {
            assert_eq!(t.edge(w[0], w[1]), Colour::Red);
        }
        assert_eq!(z.colour(1, 2), t.colour(2, 1));
    }
}
