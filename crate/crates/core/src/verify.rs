//! Independent validation of every artifact object: cycles, partitions,
//! simple paths, and split certificates.
//!
//! The solver's postconditions are enforced here, never by the code that
//! constructs the objects. Invalidity is a report with a concrete witness
//! (first violation in a canonical scan order: cycles in order, vertices in
//! order, then a coverage sweep `x1..xn, y1..yn`), not an error.

use crate::colouring::{Colour, Colouring, ColouringView, Cycle, CycleKind, Partition, Side, Vertex};
use crate::split::SplitCertificate;

/// Anything with a class size and a total edge-colour map: a [`Colouring`]
/// or a [`ColouringView`]. Lets the verifier run in view coordinates too.
pub trait EdgeSource {
    fn size(&self) -> usize;
    fn edge(&self, i: u32, j: u32) -> Colour;
}

impl EdgeSource for Colouring {
    fn size(&self) -> usize {
        self.n()
    }
    fn edge(&self, i: u32, j: u32) -> Colour {
        self.colour(i, j)
    }
}

impl EdgeSource for ColouringView<'_> {
    fn size(&self) -> usize {
        self.m()
    }
    fn edge(&self, i: u32, j: u32) -> Colour {
        self.colour(i, j)
    }
}

/// Outcome of a partition check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    pub cycle_count: usize,
    pub red_cycles: usize,
    pub blue_cycles: usize,
    pub untagged_cycles: usize,
    /// First violation in canonical scan order; `None` iff `valid`.
    pub failure: Option<String>,
}

impl VerifyReport {
    fn ok(p: &Partition) -> VerifyReport {
        VerifyReport {
            valid: true,
            cycle_count: p.cycles.len(),
            red_cycles: p.cycles.iter().filter(|c| c.colour_tag == Some(Colour::Red)).count(),
            blue_cycles: p.cycles.iter().filter(|c| c.colour_tag == Some(Colour::Blue)).count(),
            untagged_cycles: p.cycles.iter().filter(|c| c.colour_tag.is_none()).count(),
            failure: None,
        }
    }

    fn fail(p: &Partition, msg: String) -> VerifyReport {
        VerifyReport { failure: Some(msg), valid: false, ..VerifyReport::ok(p) }
    }
}

fn lookup(src: &impl EdgeSource, a: Vertex, b: Vertex) -> Colour {
    debug_assert_ne!(a.side, b.side);
    let (i, j) = if a.side == Side::X { (a.index, b.index) } else { (b.index, a.index) };
    src.edge(i, j)
}

/// Check one cycle's own invariants against an edge source.
/// Returns the first violation, if any. Disjointness/coverage are the
/// partition checker's job.
fn check_cycle(src: &impl EdgeSource, cy: &Cycle) -> Option<String> {
    let n = src.size() as u32;
    for &v in &cy.vertices {
        if v.index == 0 || v.index > n {
            return Some(format!("vertex {v} out of range for n={n}"));
        }
    }
    match cy.kind {
        CycleKind::Singleton => {
            if cy.vertices.len() != 1 {
                return Some(format!("singleton cycle has {} vertices", cy.vertices.len()));
            }
            if let Some(c) = cy.colour_tag {
                return Some(format!("singleton cycle carries colour tag {c}"));
            }
        }
        CycleKind::EdgeCycle => {
            if cy.vertices.len() != 2 {
                return Some(format!("edge-cycle has {} vertices", cy.vertices.len()));
            }
            let (a, b) = (cy.vertices[0], cy.vertices[1]);
            if a.side == b.side {
                return Some(format!("edge-cycle {a},{b} has both vertices in one class"));
            }
            let Some(tag) = cy.colour_tag else {
                return Some(format!("edge-cycle {a},{b} is untagged"));
            };
            let actual = lookup(src, a, b);
            if actual != tag {
                let (x, y) = if a.side == Side::X { (a, b) } else { (b, a) };
                return Some(format!("edge {x}{y} is {actual:?}, tag {tag:?}"));
            }
        }
        CycleKind::Proper => {
            let k = cy.vertices.len();
            if k < 4 || !k.is_multiple_of(2) {
                return Some(format!("proper cycle has {k} vertices, need even ≥ 4"));
            }
            let Some(tag) = cy.colour_tag else {
                return Some("proper cycle is untagged".into());
            };
            for w in 0..k {
                let a = cy.vertices[w];
                let b = cy.vertices[(w + 1) % k];
                if a.side == b.side {
                    return Some(format!("consecutive vertices {a},{b} in the same class"));
                }
                let actual = lookup(src, a, b);
                if actual != tag {
                    let (x, y) = if a.side == Side::X { (a, b) } else { (b, a) };
                    return Some(format!("edge {x}{y} is {actual:?}, tag {tag:?}"));
                }
            }
        }
    }
    None
}

/// Verify a partition against any edge source (base colouring or view).
pub fn verify_partition_on(src: &impl EdgeSource, p: &Partition) -> VerifyReport {
    let n = src.size();
    let mut covered_x = vec![false; n + 1];
    let mut covered_y = vec![false; n + 1];
    for cy in &p.cycles {
        if let Some(msg) = check_cycle(src, cy) {
            return VerifyReport::fail(p, msg);
        }
        for &v in &cy.vertices {
            let seen = match v.side {
                Side::X => &mut covered_x[v.index as usize],
                Side::Y => &mut covered_y[v.index as usize],
            };
            if std::mem::replace(seen, true) {
                return VerifyReport::fail(p, format!("{v} covered twice"));
            }
        }
    }
    if let Some(i) = (1..=n).find(|&i| !covered_x[i]) {
        return VerifyReport::fail(p, format!("x{i} uncovered"));
    }
    if let Some(j) = (1..=n).find(|&j| !covered_y[j]) {
        return VerifyReport::fail(p, format!("y{j} uncovered"));
    }
    VerifyReport::ok(p)
}

/// Verify a partition against a base colouring.
pub fn verify_partition(c: &Colouring, p: &Partition) -> VerifyReport {
    verify_partition_on(c, p)
}

/// Check a claimed simple path: an all-blue prefix up to the turning point
/// followed by an all-red suffix, alternating classes, no repeats.
/// `turning_index` is the 0-based position of the turning point. Paths of
/// at most 2 vertices pass for any claimed turning point (their at most one
/// edge belongs to a segment that may be degenerate on either side).
pub fn verify_simple_path_on(
    src: &impl EdgeSource,
    vertices: &[Vertex],
    turning_index: usize,
) -> bool {
    let n = src.size() as u32;
    if vertices.is_empty() {
        return turning_index == 0;
    }
    if turning_index >= vertices.len() {
        return false;
    }
    let mut seen_x = vec![false; n as usize + 1];
    let mut seen_y = vec![false; n as usize + 1];
    for w in vertices.windows(2) {
        if w[0].side == w[1].side {
            return false;
        }
    }
    for &v in vertices {
        if v.index == 0 || v.index > n {
            return false;
        }
        let seen = match v.side {
            Side::X => &mut seen_x[v.index as usize],
            Side::Y => &mut seen_y[v.index as usize],
        };
        if std::mem::replace(seen, true) {
            return false;
        }
    }
    if vertices.len() <= 2 {
        return true;
    }
    for (e, w) in vertices.windows(2).enumerate() {
        let want = if e < turning_index { Colour::Blue } else { Colour::Red };
        if lookup(src, w[0], w[1]) != want {
            return false;
        }
    }
    true
}

/// [`verify_simple_path_on`] against a base colouring.
pub fn verify_simple_path(c: &Colouring, vertices: &[Vertex], turning_index: usize) -> bool {
    verify_simple_path_on(c, vertices, turning_index)
}

/// Check a split certificate: `X1,X2` partition the X-indices, `Y1,Y2` the
/// Y-indices, all four parts nonempty, and every edge is red inside the
/// diagonal block pairs `(X1,Y1)`, `(X2,Y2)` and blue across.
pub fn verify_split_on(src: &impl EdgeSource, cert: &SplitCertificate) -> bool {
    let n = src.size();
    let covers = |a: &[u32], b: &[u32]| -> bool {
        let mut seen = vec![false; n + 1];
        for &i in a.iter().chain(b.iter()) {
            if i == 0 || i as usize > n || std::mem::replace(&mut seen[i as usize], true) {
                return false;
            }
        }
        seen[1..].iter().all(|&s| s)
    };
    if cert.x1.is_empty() || cert.x2.is_empty() || cert.y1.is_empty() || cert.y2.is_empty() {
        return false;
    }
    if !covers(&cert.x1, &cert.x2) || !covers(&cert.y1, &cert.y2) {
        return false;
    }
    let block = |xs: &[u32], ys: &[u32], want: Colour| -> bool {
        xs.iter().all(|&i| ys.iter().all(|&j| src.edge(i, j) == want))
    };
    block(&cert.x1, &cert.y1, Colour::Red)
        && block(&cert.x2, &cert.y2, Colour::Red)
        && block(&cert.x1, &cert.y2, Colour::Blue)
        && block(&cert.x2, &cert.y1, Colour::Blue)
}

/// [`verify_split_on`] against a base colouring.
pub fn verify_split(c: &Colouring, cert: &SplitCertificate) -> bool {
    verify_split_on(c, cert)
}
