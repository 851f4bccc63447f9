//! Value types: colours, vertices, colourings, cycles, partitions, and
//! relabelled/recoloured views.
//!
//! Everything here is bookkeeping: no algorithms beyond index plumbing.
//! Indices are 1-based throughout the public model, matching the usual
//! `x_1..x_n`, `y_1..y_n` notation; the storage layout is private.
//!
//! The text format for colourings is bit-exact: line 1 is the decimal class
//! size `n`, lines 2..=n+1 are `n` characters from `{R,B}`; row `i` is
//! `x_i`, column `j` is `y_j`. A trailing newline is optional.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// One of the two edge colours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    /// The other colour.
    #[must_use]
    pub fn complement(self) -> Colour {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
        }
    }

    /// Single-letter code used by the text format.
    pub fn letter(self) -> char {
        match self {
            Colour::Red => 'R',
            Colour::Blue => 'B',
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colour::Red => write!(f, "red"),
            Colour::Blue => write!(f, "blue"),
        }
    }
}

/// Which partition class a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    X,
    Y,
}

impl Side {
    /// The opposite class.
    #[must_use]
    pub fn opposite(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// A vertex `x_i` or `y_j` of the bipartite graph; `index` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub side: Side,
    pub index: u32,
}

impl Vertex {
    pub fn x(index: u32) -> Vertex {
        Vertex { side: Side::X, index }
    }

    pub fn y(index: u32) -> Vertex {
        Vertex { side: Side::Y, index }
    }

    /// Same index, opposite class.
    #[must_use]
    pub fn transposed(self) -> Vertex {
        Vertex { side: self.side.opposite(), index: self.index }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.side {
            Side::X => 'x',
            Side::Y => 'y',
        };
        write!(f, "{s}{}", self.index)
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Vertex> {
        let err = || Error::Parse {
            line: 1,
            col: 1,
            msg: format!("expected a vertex like x3 or y12, got {s:?}"),
        };
        let mut chars = s.chars();
        let side = match chars.next() {
            Some('x') => Side::X,
            Some('y') => Side::Y,
            _ => return Err(err()),
        };
        let index: u32 = chars.as_str().parse().map_err(|_| err())?;
        if index == 0 {
            return Err(err());
        }
        Ok(Vertex { side, index })
    }
}

/// An immutable red/blue assignment on the `n × n` edge set of `K_{n,n}`.
///
/// Stored as a bitset (bit set ⇔ red), so cloning and row comparisons are
/// cheap even at `n` in the thousands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Colouring {
    n: usize,
    /// Row-major bits: bit `(i-1)*n + (j-1)` is set iff `x_i y_j` is red.
    bits: Vec<u64>,
}

/// Build a colouring from character rows; see [`Colouring::from_rows`].
pub fn build_colouring<S: AsRef<str>>(n: usize, rows: &[S]) -> Result<Colouring> {
    Colouring::from_rows(n, rows)
}

/// Look up one edge colour with range checking; see [`Colouring::edge_colour`].
pub fn edge_colour(c: &Colouring, i: u32, j: u32) -> Result<Colour> {
    c.edge_colour(i, j)
}

impl Colouring {
    /// Build from `n` rows of `n` characters over `{R,B}`.
    ///
    /// Errors carry the 1-based position of the offence; the row count and
    /// each row length must equal `n`, and `n ≥ 1`.
    pub fn from_rows<S: AsRef<str>>(n: usize, rows: &[S]) -> Result<Colouring> {
        if n == 0 {
            return Err(Error::Parse { line: 1, col: 1, msg: "n must be at least 1".into() });
        }
        if rows.len() != n {
            return Err(Error::Parse {
                line: rows.len().min(n) + 1,
                col: 1,
                msg: format!("expected {n} rows, got {}", rows.len()),
            });
        }
        let mut c = Colouring { n, bits: vec![0; (n * n).div_ceil(64)] };
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            let mut count = 0usize;
            for (k, ch) in row.chars().enumerate() {
                count += 1;
                match ch {
                    'R' => c.set_red(r, k),
                    'B' => {}
                    _ => {
                        return Err(Error::Parse {
                            line: r + 1,
                            col: k + 1,
                            msg: format!("illegal character {ch:?}, expected R or B"),
                        })
                    }
                }
            }
            if count != n {
                return Err(Error::Parse {
                    line: r + 1,
                    col: count.min(n) + 1,
                    msg: format!("row has {count} characters, expected {n}"),
                });
            }
        }
        Ok(c)
    }

    /// Build from a predicate on 1-based indices.
    pub fn from_fn(n: usize, mut f: impl FnMut(u32, u32) -> Colour) -> Colouring {
        assert!(n >= 1, "n must be at least 1");
        let mut c = Colouring { n, bits: vec![0; (n * n).div_ceil(64)] };
        for i in 0..n {
            for j in 0..n {
                if f(i as u32 + 1, j as u32 + 1) == Colour::Red {
                    c.set_red(i, j);
                }
            }
        }
        c
    }

    fn set_red(&mut self, row0: usize, col0: usize) {
        let bit = row0 * self.n + col0;
        self.bits[bit / 64] |= 1u64 << (bit % 64);
    }

    /// Class size `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Colour of edge `x_i y_j`; panics on out-of-range indices (internal
    /// callers maintain ranges; external callers use [`Self::edge_colour`]).
    pub fn colour(&self, i: u32, j: u32) -> Colour {
        assert!(
            (1..=self.n as u32).contains(&i) && (1..=self.n as u32).contains(&j),
            "edge x{i}y{j} out of range for n={}",
            self.n
        );
        let bit = (i as usize - 1) * self.n + (j as usize - 1);
        if self.bits[bit / 64] >> (bit % 64) & 1 == 1 {
            Colour::Red
        } else {
            Colour::Blue
        }
    }

    /// Range-checked edge lookup.
    pub fn edge_colour(&self, i: u32, j: u32) -> Result<Colour> {
        let n = self.n as u32;
        if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
            return Err(Error::OutOfRange(format!("edge x{i}y{j} with n={n}")));
        }
        Ok(self.colour(i, j))
    }

    /// The red neighbourhood of `x_i` as a sorted list of Y-indices.
    pub fn red_row(&self, i: u32) -> Vec<u32> {
        (1..=self.n as u32).filter(|&j| self.colour(i, j) == Colour::Red).collect()
    }

    /// Serialize to the text format (with trailing newline).
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.n * (self.n + 1) + 8);
        out.push_str(&self.n.to_string());
        out.push('\n');
        for i in 1..=self.n as u32 {
            for j in 1..=self.n as u32 {
                out.push(self.colour(i, j).letter());
            }
            out.push('\n');
        }
        out
    }

    /// Parse the text format; inverse of [`Self::to_text`].
    pub fn parse_text(text: &str) -> Result<Colouring> {
        let mut lines = text.lines();
        let first = lines.next().ok_or(Error::Parse {
            line: 1,
            col: 1,
            msg: "empty input, expected a class size".into(),
        })?;
        let n: usize = first.trim().parse().map_err(|_| Error::Parse {
            line: 1,
            col: 1,
            msg: format!("expected a class size, got {first:?}"),
        })?;
        if n == 0 {
            return Err(Error::Parse { line: 1, col: 1, msg: "n must be at least 1".into() });
        }
        let rows: Vec<&str> = lines.collect();
        if rows.len() < n {
            return Err(Error::Parse {
                line: rows.len() + 2,
                col: 1,
                msg: format!("expected {n} rows, got {}", rows.len()),
            });
        }
        if let Some(extra) = rows.get(n) {
            if !extra.trim().is_empty() {
                return Err(Error::Parse {
                    line: n + 2,
                    col: 1,
                    msg: "unexpected content after the matrix".into(),
                });
            }
        }
        // Shift parse positions by one line for the header.
        Colouring::from_rows(n, &rows[..n]).map_err(|e| match e {
            Error::Parse { line, col, msg } => Error::Parse { line: line + 1, col, msg },
            other => other,
        })
    }
}

/// A balanced, optionally colour-complemented, optionally transposed
/// relabelling of a subset of a base colouring.
///
/// View vertex `x_i` means base vertex `x_{xs[i]}` (or `y_{ys[i]}` when the
/// view is transposed); view edge colours are complemented iff `flip`.
/// Views never copy the matrix.
#[derive(Debug, Clone)]
pub struct ColouringView<'a> {
    base: &'a Colouring,
    xs: Vec<u32>,
    ys: Vec<u32>,
    flip: bool,
    transpose: bool,
}

/// Construct a balanced induced sub-colouring view; see
/// [`ColouringView::new`].
pub fn make_view<'a>(
    c: &'a Colouring,
    xs: Vec<u32>,
    ys: Vec<u32>,
    flip: bool,
) -> Result<ColouringView<'a>> {
    ColouringView::new(c, xs, ys, flip)
}

impl<'a> ColouringView<'a> {
    /// Balanced induced sub-view with optional global colour complement.
    /// `xs[i-1]` is the base X-index of view vertex `x_i` (likewise `ys`).
    pub fn new(c: &'a Colouring, xs: Vec<u32>, ys: Vec<u32>, flip: bool) -> Result<Self> {
        if xs.is_empty() || xs.len() != ys.len() {
            return Err(Error::Unbalanced(format!(
                "|xs|={} and |ys|={}, need equal and at least 1",
                xs.len(),
                ys.len()
            )));
        }
        let n = c.n() as u32;
        for (list, side) in [(&xs, "X"), (&ys, "Y")] {
            let mut seen = vec![false; c.n() + 1];
            for &i in list.iter() {
                if !(1..=n).contains(&i) {
                    return Err(Error::OutOfRange(format!("{side}-index {i} with n={n}")));
                }
                if std::mem::replace(&mut seen[i as usize], true) {
                    return Err(Error::Precondition(format!("duplicate {side}-index {i}")));
                }
            }
        }
        Ok(ColouringView { base: c, xs, ys, flip, transpose: false })
    }

    /// Identity view of a whole colouring.
    pub fn identity(c: &'a Colouring) -> Self {
        let all: Vec<u32> = (1..=c.n() as u32).collect();
        ColouringView { base: c, xs: all.clone(), ys: all, flip: false, transpose: false }
    }

    /// Class size of the view.
    pub fn m(&self) -> usize {
        self.xs.len()
    }

    pub fn base(&self) -> &'a Colouring {
        self.base
    }

    pub fn flipped(&self) -> bool {
        self.flip
    }

    /// Same view with X and Y roles exchanged (view `x_i` now denotes what
    /// `y_i` denoted). The base colouring is unchanged; lookups swap the
    /// argument roles.
    #[must_use]
    pub fn transposed(&self) -> Self {
        let mut v = self.clone();
        v.transpose = !v.transpose;
        v
    }

    /// Same view with every colour complemented (again).
    #[must_use]
    pub fn colour_flipped(&self) -> Self {
        let mut v = self.clone();
        v.flip = !v.flip;
        v
    }

    /// Colour of view edge `x_i y_j` (1-based view indices).
    pub fn colour(&self, i: u32, j: u32) -> Colour {
        let m = self.m() as u32;
        assert!(
            (1..=m).contains(&i) && (1..=m).contains(&j),
            "view edge x{i}y{j} out of range for m={m}"
        );
        let (bi, bj) = if self.transpose {
            (self.xs[j as usize - 1], self.ys[i as usize - 1])
        } else {
            (self.xs[i as usize - 1], self.ys[j as usize - 1])
        };
        let c = self.base.colour(bi, bj);
        if self.flip {
            c.complement()
        } else {
            c
        }
    }

    /// Map a view vertex to the base vertex it denotes.
    pub fn translate_vertex(&self, v: Vertex) -> Vertex {
        let m = self.m() as u32;
        assert!((1..=m).contains(&v.index), "view vertex {v} out of range for m={m}");
        let side = if self.transpose { v.side.opposite() } else { v.side };
        match side {
            Side::X => Vertex::x(self.xs[v.index as usize - 1]),
            Side::Y => Vertex::y(self.ys[v.index as usize - 1]),
        }
    }

    /// Map a cycle from view coordinates to base coordinates, adjusting the
    /// colour tag for the view's colour complement.
    pub fn translate_cycle(&self, cycle: &Cycle) -> Cycle {
        Cycle {
            vertices: cycle.vertices.iter().map(|&v| self.translate_vertex(v)).collect(),
            kind: cycle.kind,
            colour_tag: cycle.colour_tag.map(|c| if self.flip { c.complement() } else { c }),
        }
    }

    /// Map a whole partition to base coordinates.
    pub fn translate_partition(&self, p: &Partition) -> Partition {
        Partition { cycles: p.cycles.iter().map(|c| self.translate_cycle(c)).collect() }
    }

    /// Compose with a further relabelling given in this view's coordinates.
    /// Only valid on untransposed views (all callers relabel before any
    /// transposition).
    pub fn relabel(&self, xs: Vec<u32>, ys: Vec<u32>, extra_flip: bool) -> Result<Self> {
        assert!(!self.transpose, "relabel on a transposed view is not supported");
        let m = self.m() as u32;
        let map = |list: &[u32], table: &[u32], side: &str| -> Result<Vec<u32>> {
            list.iter()
                .map(|&i| {
                    if (1..=m).contains(&i) {
                        Ok(table[i as usize - 1])
                    } else {
                        Err(Error::OutOfRange(format!("{side}-index {i} with m={m}")))
                    }
                })
                .collect()
        };
        if xs.is_empty() || xs.len() != ys.len() {
            return Err(Error::Unbalanced(format!(
                "|xs|={} and |ys|={}, need equal and at least 1",
                xs.len(),
                ys.len()
            )));
        }
        Ok(ColouringView {
            base: self.base,
            xs: map(&xs, &self.xs, "X")?,
            ys: map(&ys, &self.ys, "Y")?,
            flip: self.flip ^ extra_flip,
            transpose: false,
        })
    }
}

/// Which degenerate form a cycle takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleKind {
    /// A single vertex; monochromatic under any colour, so untagged.
    Singleton,
    /// A single edge, one X vertex and one Y vertex; tagged with that
    /// edge's colour.
    EdgeCycle,
    /// An honest cycle: even length ≥ 4, alternating classes, all edges
    /// (including the wrap-around) sharing the tag colour.
    Proper,
}

/// A monochromatic cycle in the generalized sense: a single vertex and a
/// single edge both count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub vertices: Vec<Vertex>,
    pub kind: CycleKind,
    pub colour_tag: Option<Colour>,
}

impl Cycle {
    pub fn singleton(v: Vertex) -> Cycle {
        Cycle { vertices: vec![v], kind: CycleKind::Singleton, colour_tag: None }
    }

    pub fn edge(a: Vertex, b: Vertex, colour: Colour) -> Cycle {
        debug_assert_ne!(a.side, b.side, "edge-cycle needs one vertex per class");
        Cycle { vertices: vec![a, b], kind: CycleKind::EdgeCycle, colour_tag: Some(colour) }
    }

    pub fn proper(vertices: Vec<Vertex>, colour: Colour) -> Cycle {
        debug_assert!(vertices.len() >= 4 && vertices.len().is_multiple_of(2));
        Cycle { vertices, kind: CycleKind::Proper, colour_tag: Some(colour) }
    }

    /// Dispatch on the vertex count: 1 ⇒ singleton (colour dropped),
    /// 2 ⇒ edge-cycle, otherwise proper.
    pub fn from_vertices(vertices: Vec<Vertex>, colour: Colour) -> Cycle {
        match vertices.len() {
            0 => panic!("empty cycle"),
            1 => Cycle::singleton(vertices[0]),
            2 => Cycle::edge(vertices[0], vertices[1], colour),
            _ => Cycle::proper(vertices, colour),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// True iff `a` and `b` appear consecutively (cyclically) in the cycle.
    /// For an edge-cycle the single edge counts.
    pub fn has_adjacent_pair(&self, a: Vertex, b: Vertex) -> bool {
        let k = self.vertices.len();
        if k < 2 {
            return false;
        }
        (0..k).any(|i| {
            let u = self.vertices[i];
            let v = self.vertices[(i + 1) % k];
            (u == a && v == b) || (u == b && v == a)
        })
    }
}

/// A family of vertex-disjoint monochromatic cycles covering all vertices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Partition {
    pub cycles: Vec<Cycle>,
}

impl Partition {
    pub fn new(cycles: Vec<Cycle>) -> Partition {
        Partition { cycles }
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// A monochromatic path, possibly empty; paths of at most 2 vertices may
/// carry either colour tag (they have at most one edge).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoPath {
    pub vertices: Vec<Vertex>,
    pub colour_tag: Option<Colour>,
}

impl MonoPath {
    pub fn empty() -> MonoPath {
        MonoPath { vertices: Vec::new(), colour_tag: None }
    }

    pub fn new(vertices: Vec<Vertex>, colour: Colour) -> MonoPath {
        MonoPath { vertices, colour_tag: Some(colour) }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_and_lookup() {
        let c = build_colouring(2, &["RB", "BR"]).unwrap();
        assert_eq!(c.colour(1, 1), Colour::Red);
        assert_eq!(c.colour(1, 2), Colour::Blue);
        assert_eq!(c.colour(2, 1), Colour::Blue);
        assert_eq!(c.colour(2, 2), Colour::Red);
        assert_eq!(edge_colour(&c, 1, 2).unwrap(), Colour::Blue);
        assert_eq!(edge_colour(&c, 2, 2).unwrap(), Colour::Red);
    }

    #[test]
    fn single_edge() {
        let c = build_colouring(1, &["R"]).unwrap();
        assert_eq!(c.colour(1, 1), Colour::Red);
        let b = build_colouring(1, &["B"]).unwrap();
        assert_eq!(edge_colour(&b, 1, 1).unwrap(), Colour::Blue);
    }

    #[test]
    fn illegal_character_position() {
        let err = build_colouring(2, &["RX", "BR"]).unwrap_err();
        match err {
            Error::Parse { line, col, .. } => {
                assert_eq!((line, col), (1, 2));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn dimension_mismatch_rejected() {
        assert!(build_colouring(2, &["RB"]).is_err());
        assert!(build_colouring(2, &["RB", "BRR"]).is_err());
        assert!(edge_colour(&build_colouring(1, &["R"]).unwrap(), 1, 2).is_err());
    }

    #[test]
    fn text_round_trip() {
        let c = build_colouring(3, &["RBB", "BRB", "BBR"]).unwrap();
        let text = c.to_text();
        assert_eq!(text, "3\nRBB\nBRB\nBBR\n");
        assert_eq!(Colouring::parse_text(&text).unwrap(), c);
        assert_eq!(Colouring::parse_text(text.trim_end()).unwrap(), c);
    }

    #[test]
    fn identity_view_and_flip() {
        let c = build_colouring(2, &["RB", "BR"]).unwrap();
        let v = ColouringView::identity(&c);
        assert_eq!(v.colour(1, 2), Colour::Blue);
        let f = v.colour_flipped();
        assert_eq!(f.colour(1, 2), Colour::Red);
        assert_eq!(f.colour_flipped().colour(1, 2), Colour::Blue);
    }

    #[test]
    fn restricted_view() {
        let c = build_colouring(2, &["RB", "BR"]).unwrap();
        let v = make_view(&c, vec![2], vec![2], false).unwrap();
        assert_eq!(v.m(), 1);
        assert_eq!(v.colour(1, 1), Colour::Red);
        assert_eq!(v.translate_vertex(Vertex::x(1)), Vertex::x(2));
    }

    #[test]
    fn flipped_singleton_view() {
        let c = build_colouring(1, &["R"]).unwrap();
        let v = make_view(&c, vec![1], vec![1], true).unwrap();
        assert_eq!(v.colour(1, 1), Colour::Blue);
    }

    #[test]
    fn unbalanced_view_rejected() {
        let c = build_colouring(2, &["RB", "BR"]).unwrap();
        assert!(make_view(&c, vec![1, 2], vec![1], false).is_err());
        assert!(make_view(&c, vec![], vec![], false).is_err());
        assert!(make_view(&c, vec![1, 1], vec![1, 2], false).is_err());
        assert!(make_view(&c, vec![1, 3], vec![1, 2], false).is_err());
    }

    #[test]
    fn transposed_view_swaps_roles() {
        let c = build_colouring(2, &["RR", "BB"]).unwrap();
        let v = ColouringView::identity(&c).transposed();
        // view x_i denotes base y_i: view edge x2 y1 = base edge x1 y2.
        assert_eq!(v.colour(2, 1), c.colour(1, 2));
        assert_eq!(v.colour(1, 2), c.colour(2, 1));
        assert_eq!(v.translate_vertex(Vertex::x(2)), Vertex::y(2));
    }

    #[test]
    fn translate_cycle_adjusts_tag() {
        let c = build_colouring(2, &["RB", "BR"]).unwrap();
        let v = make_view(&c, vec![1, 2], vec![1, 2], true).unwrap();
        let cy = Cycle::edge(Vertex::x(1), Vertex::y(1), Colour::Blue);
        let t = v.translate_cycle(&cy);
        assert_eq!(t.colour_tag, Some(Colour::Red));
        assert_eq!(t.vertices, vec![Vertex::x(1), Vertex::y(1)]);
    }

    #[test]
    fn vertex_display_and_parse() {
        assert_eq!(Vertex::x(12).to_string(), "x12");
        assert_eq!("y3".parse::<Vertex>().unwrap(), Vertex::y(3));
        assert!("z3".parse::<Vertex>().is_err());
        assert!("x0".parse::<Vertex>().is_err());
    }

    #[test]
    fn relabel_composes() {
        let c = build_colouring(3, &["RBB", "BRB", "BBR"]).unwrap();
        let v = make_view(&c, vec![2, 3], vec![2, 3], false).unwrap();
        let w = v.relabel(vec![2, 1], vec![1, 2], true).unwrap();
        // w's x1 = v's x2 = base x3; w's y1 = v's y1 = base y2; flipped.
        assert_eq!(w.colour(1, 1), c.colour(3, 2).complement());
        assert_eq!(w.translate_vertex(Vertex::x(1)), Vertex::x(3));
    }
}
