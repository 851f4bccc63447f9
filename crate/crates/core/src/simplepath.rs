//! The search engine: on any colouring it produces either a Hamiltonian
//! simple path (a blue path followed by a red path sharing a turning point)
//! or a split certificate, plus a converter turning such a path into a
//! monochromatic cycle and a monochromatic path of different colours, both
//! of even size.
//!
//! The engine grows a simple path one vertex at a time. Greedy end
//! extension handles most steps; when the path is maximal, a case analysis
//! on the classes of its endpoints and turning point either rearranges the
//! path so that growth resumes, grows it directly, or — when every probe
//! comes back the "split" colour — assembles a verified split certificate.

use crate::colouring::{Colour, Colouring, Cycle, MonoPath, Side, Vertex};
use crate::error::{Error, Result};
use crate::split::SplitCertificate;
use crate::trace;
use crate::verify::{verify_simple_path, verify_split};

/// A Hamiltonian simple path: edges before `turning` are blue, edges from
/// `turning` on are red.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplePath {
    pub vertices: Vec<Vertex>,
    pub turning: usize,
}

/// Either outcome of the engine.
#[derive(Debug, Clone)]
pub enum PathOrSplit {
    Path(SimplePath),
    Split(SplitCertificate),
}

/// A monochromatic cycle plus a monochromatic path of the complementary
/// colour (possibly empty), together covering every vertex, both even.
#[derive(Debug, Clone)]
pub struct PathCycleDecomposition {
    pub cycle: Cycle,
    pub path: MonoPath,
}

/// Edge lookups in engine coordinates: `transpose` swaps the two classes,
/// which lets the turning-point case analysis assume an X-side turning
/// point. Probes are traced in base-board coordinates.
#[derive(Clone, Copy)]
struct Board<'a> {
    c: &'a Colouring,
    transpose: bool,
}

impl Board<'_> {
    fn edge(&self, a: Vertex, b: Vertex, context: &'static str) -> Colour {
        debug_assert_ne!(a.side, b.side, "edge endpoints must lie in different classes");
        let (mut i, mut j) = if a.side == Side::X { (a.index, b.index) } else { (b.index, a.index) };
        if self.transpose {
            std::mem::swap(&mut i, &mut j);
        }
        let colour = self.c.colour(i, j);
        trace::record(i, j, colour, context);
        colour
    }
}

/// The engine's working representation: a red arm `r_1..r_s` and a blue
/// arm `b_1..b_t`, both listed outward from the turning vertex.
#[derive(Debug, Clone)]
struct SPath {
    blue: Vec<Vertex>,
    turning: Vertex,
    red: Vec<Vertex>,
}

impl SPath {
    fn single(v: Vertex) -> SPath {
        SPath { blue: Vec::new(), turning: v, red: Vec::new() }
    }

    fn len(&self) -> usize {
        self.blue.len() + 1 + self.red.len()
    }

    fn blue_end(&self) -> Vertex {
        *self.blue.last().unwrap_or(&self.turning)
    }

    fn red_end(&self) -> Vertex {
        *self.red.last().unwrap_or(&self.turning)
    }

    /// The blue-prefix sequence `(b_t, …, b_1, x, r_1, …, r_s)`.
    fn sequence(&self) -> Vec<Vertex> {
        let mut seq = Vec::with_capacity(self.len());
        seq.extend(self.blue.iter().rev());
        seq.push(self.turning);
        seq.extend(self.red.iter());
        seq
    }

    fn turning_index(&self) -> usize {
        self.blue.len()
    }

    /// Re-root a vertex sequence as a simple path: the edge colours must
    /// read blue-then-red in one of the two directions.
    fn from_sequence(board: &Board, seq: &[Vertex]) -> Result<SPath> {
        let try_dir = |seq: &[Vertex]| -> Option<SPath> {
            let mut first_red = None;
            for e in 0..seq.len().saturating_sub(1) {
                let col = board.edge(seq[e], seq[e + 1], "reroot");
                match (col, first_red) {
                    (Colour::Red, None) => first_red = Some(e),
                    (Colour::Blue, Some(_)) => return None,
                    _ => {}
                }
            }
            let t = first_red.unwrap_or(seq.len() - 1);
            Some(SPath {
                blue: seq[..t].iter().rev().copied().collect(),
                turning: seq[t],
                red: seq[t + 1..].to_vec(),
            })
        };
        if let Some(sp) = try_dir(seq) {
            return Ok(sp);
        }
        let rev: Vec<Vertex> = seq.iter().rev().copied().collect();
        try_dir(&rev).ok_or_else(|| {
            Error::Internal(format!(
                "constructed vertex sequence is not a simple path: {}",
                seq.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
            ))
        })
    }
}

/// Covered-vertex bookkeeping, indices 1-based per class.
struct Covered {
    x: Vec<bool>,
    y: Vec<bool>,
}

impl Covered {
    fn of(n: usize, sp: &SPath) -> Covered {
        let mut cov = Covered { x: vec![false; n + 1], y: vec![false; n + 1] };
        for v in sp.blue.iter().chain(std::iter::once(&sp.turning)).chain(sp.red.iter()) {
            match v.side {
                Side::X => cov.x[v.index as usize] = true,
                Side::Y => cov.y[v.index as usize] = true,
            }
        }
        cov
    }

    fn uncovered(&self, side: Side) -> Vec<Vertex> {
        let slots = match side {
            Side::X => &self.x,
            Side::Y => &self.y,
        };
        (1..slots.len())
            .filter(|&i| !slots[i])
            .map(|i| Vertex { side, index: i as u32 })
            .collect()
    }
}

enum Step {
    /// A replacement vertex sequence (same board coordinates); it may or
    /// may not be longer than the current path.
    Seq(Vec<Vertex>),
    /// All split probes passed; certificate in board coordinates.
    Cert(SplitCertificate),
}

/// Produce either a Hamiltonian simple path or a split certificate.
/// Total: every colouring yields exactly one of the two, each verified.
pub fn find_hamiltonian_simple_path(c: &Colouring) -> Result<PathOrSplit> {
    let n = c.n();
    let plain = Board { c, transpose: false };
    let mut sp = SPath::single(Vertex::x(1));
    let mut stall = 0usize;
    let stall_bound = 8 * n + 16;
    loop {
        let before = sp.len();
        let mut cov = Covered::of(n, &sp);
        while extend_once(&plain, &mut sp, &mut cov) {}
        if sp.len() == 2 * n {
            let path = SimplePath { vertices: sp.sequence(), turning: sp.turning_index() };
            if !verify_simple_path(c, &path.vertices, path.turning) {
                return Err(Error::Internal("engine emitted an invalid simple path".into()));
            }
            return Ok(PathOrSplit::Path(path));
        }
        // Maximal but not Hamiltonian: case analysis.
        let be = sp.blue_end();
        let re = sp.red_end();
        let x = sp.turning;
        let step = if be.side != re.side {
            case_ends_differ(&plain, &sp, &cov)
        } else if be.side == x.side {
            case_ends_match_turning(&plain, &sp, &cov)
        } else {
            // Turning point in the opposite class of both ends: run the
            // split-probe cascade, transposing so the turning point sits
            // in class X.
            let transpose = x.side == Side::Y;
            let board = Board { c, transpose };
            let flip = |v: Vertex| if transpose { v.transposed() } else { v };
            let tsp = SPath {
                blue: sp.blue.iter().map(|v| flip(*v)).collect(),
                turning: flip(x),
                red: sp.red.iter().map(|v| flip(*v)).collect(),
            };
            let tcov = Covered::of(n, &tsp);
            match case_turning_opposite(&board, &tsp, &tcov)? {
                Step::Seq(seq) => Step::Seq(seq.into_iter().map(flip).collect()),
                Step::Cert(cert) => {
                    let cert = if transpose {
                        SplitCertificate { x1: cert.y1, x2: cert.y2, y1: cert.x1, y2: cert.x2 }
                    } else {
                        cert
                    };
                    if !verify_split(c, &cert) {
                        return Err(Error::Internal(
                            "engine assembled an invalid split certificate".into(),
                        ));
                    }
                    return Ok(PathOrSplit::Split(cert));
                }
            }
        };
        match step {
            Step::Seq(seq) => sp = SPath::from_sequence(&plain, &seq)?,
            Step::Cert(_) => unreachable!("certificates are returned above"),
        }
        if sp.len() > before {
            stall = 0;
        } else {
            stall += 1;
            if stall > stall_bound {
                return Err(Error::Internal(format!(
                    "path search stalled after {stall} rearrangements at length {}",
                    sp.len()
                )));
            }
        }
    }
}

/// One greedy end extension: append an uncovered vertex at the red end
/// via a red edge, else at the blue end via a blue edge. Candidates are
/// scanned in increasing index order. Trying red first keeps the path
/// monochromatic on boards that carry a red Hamiltonian path, which lets
/// the downstream decomposition stay within three cycles more often.
fn extend_once(board: &Board, sp: &mut SPath, cov: &mut Covered) -> bool {
    let re = sp.red_end();
    for cand in cov.uncovered(re.side.opposite()) {
        if board.edge(re, cand, "extend-red") == Colour::Red {
            sp.red.push(cand);
            match cand.side {
                Side::X => cov.x[cand.index as usize] = true,
                Side::Y => cov.y[cand.index as usize] = true,
            }
            return true;
        }
    }
    let be = sp.blue_end();
    for cand in cov.uncovered(be.side.opposite()) {
        if board.edge(be, cand, "extend-blue") == Colour::Blue {
            sp.blue.push(cand);
            match cand.side {
                Side::X => cov.x[cand.index as usize] = true,
                Side::Y => cov.y[cand.index as usize] = true,
            }
            return true;
        }
    }
    false
}

fn least_uncovered(cov: &Covered, side: Side) -> Vertex {
    *cov.uncovered(side).first().expect("an uncovered vertex must exist in this case")
}

/// Endpoints in different classes: the path is even, so both classes have
/// uncovered vertices; the connecting edge between the two ends lets either
/// colour of the probe re-root the turning point, growing the path by one.
fn case_ends_differ(board: &Board, sp: &SPath, cov: &Covered) -> Step {
    let x = sp.turning;
    let y = least_uncovered(cov, x.side.opposite());
    let mut seq = vec![y, x];
    if board.edge(x, y, "ends-differ") == Colour::Red {
        // (y, x, r_1..r_s, b_t..b_1)
        seq.extend(sp.red.iter());
        seq.extend(sp.blue.iter().rev());
    } else {
        // (y, x, b_1..b_t, r_s..r_1)
        seq.extend(sp.blue.iter());
        seq.extend(sp.red.iter().rev());
    }
    Step::Seq(seq)
}

/// Endpoints and turning point all in one class: insert the new vertex
/// right next to the turning point on the matching-colour side; maximality
/// of the ends supplies the second edge.
fn case_ends_match_turning(board: &Board, sp: &SPath, cov: &Covered) -> Step {
    let x = sp.turning;
    let y = least_uncovered(cov, x.side.opposite());
    let mut seq;
    if board.edge(x, y, "ends-match") == Colour::Red {
        // (r_s..r_1, x, y, b_t..b_1); y–b_t is red by maximality.
        seq = sp.red.iter().rev().copied().collect::<Vec<_>>();
        seq.push(x);
        seq.push(y);
        seq.extend(sp.blue.iter().rev());
    } else {
        // (b_t..b_1, x, y, r_s..r_1); y–r_s is blue by maximality.
        seq = sp.blue.iter().rev().copied().collect::<Vec<_>>();
        seq.push(x);
        seq.push(y);
        seq.extend(sp.red.iter().rev());
    }
    Step::Seq(seq)
}

/// Turning point opposite both endpoints (board-X turning, both arms of
/// odd length): the full probe cascade. Any probe with the "non-split"
/// colour yields a rearranged or longer path; if everything matches the
/// split pattern, the certificate follows.
fn case_turning_opposite(board: &Board, sp: &SPath, cov: &Covered) -> Result<Step> {
    let x = sp.turning;
    debug_assert_eq!(x.side, Side::X);
    debug_assert!(sp.red.len() % 2 == 1 && sp.blue.len() % 2 == 1);
    let rho = &sp.red;
    let beta = &sp.blue;
    let y_fresh = least_uncovered(cov, Side::X);

    // Stage 1: turning probes for x and every covered X vertex, each on a
    // re-rooted copy of the path with that vertex as turning point.
    if let Some(seq) = turning_probes(board, rho, x, beta, y_fresh)? {
        return Ok(Step::Seq(seq));
    }
    for idx in (1..rho.len()).step_by(2) {
        // u = r_{idx+1} (X class); arms re-rooted around u.
        let u = rho[idx];
        let mut rho_u: Vec<Vertex> = rho[idx + 1..].to_vec();
        rho_u.push(x);
        rho_u.extend(&rho[..idx]);
        let beta_u: Vec<Vertex> = beta.iter().rev().copied().collect();
        if let Some(seq) = turning_probes(board, &rho_u, u, &beta_u, y_fresh)? {
            return Ok(Step::Seq(seq));
        }
    }
    for idx in (1..beta.len()).step_by(2) {
        let u = beta[idx];
        let rho_u: Vec<Vertex> = rho.iter().rev().copied().collect();
        let mut beta_u: Vec<Vertex> = beta[idx + 1..].to_vec();
        beta_u.push(x);
        beta_u.extend(&beta[..idx]);
        if let Some(seq) = turning_probes(board, &rho_u, u, &beta_u, y_fresh)? {
            return Ok(Step::Seq(seq));
        }
    }

    // Stage 2: uncovered X against the covered Y vertices of each arm.
    let x2 = cov.uncovered(Side::X);
    for &q in &x2 {
        for idx in (0..rho.len()).step_by(2) {
            if board.edge(q, rho[idx], "fresh-vs-red-arm") == Colour::Red {
                // (q, r_i..r_1, x, r_s..r_{i+1}, b_t..b_1)
                let mut seq = vec![q];
                seq.extend(rho[..=idx].iter().rev());
                seq.push(x);
                seq.extend(rho[idx + 1..].iter().rev());
                seq.extend(beta.iter().rev());
                return Ok(Step::Seq(seq));
            }
        }
        for idx in (0..beta.len()).step_by(2) {
            if board.edge(q, beta[idx], "fresh-vs-blue-arm") == Colour::Blue {
                let mut seq = vec![q];
                seq.extend(beta[..=idx].iter().rev());
                seq.push(x);
                seq.extend(beta[idx + 1..].iter().rev());
                seq.extend(rho.iter().rev());
                return Ok(Step::Seq(seq));
            }
        }
    }

    // Stage 3: classify uncovered Y vertices by their edge to the turning
    // point (red side vs blue side).
    let mut y1_out = Vec::new();
    let mut y2_out = Vec::new();
    for z in cov.uncovered(Side::Y) {
        if board.edge(x, z, "classify-fresh-y") == Colour::Red {
            y1_out.push(z);
        } else {
            y2_out.push(z);
        }
    }

    // Stage 4: uncovered X against classified uncovered Y.
    for &q in &x2 {
        for &z in &y1_out {
            if board.edge(q, z, "fresh-pair-red-side") == Colour::Red {
                // (q, z, x, r_1..r_s, b_2..b_t): r_s–b_2 is red, b_1 drops out.
                let mut seq = vec![q, z, x];
                seq.extend(rho.iter());
                seq.extend(beta[1..].iter());
                return Ok(Step::Seq(seq));
            }
        }
        for &z in &y2_out {
            if board.edge(q, z, "fresh-pair-blue-side") == Colour::Blue {
                let mut seq = vec![q, z, x];
                seq.extend(beta.iter());
                seq.extend(rho[1..].iter());
                return Ok(Step::Seq(seq));
            }
        }
    }

    // Stage 5: covered X (other than the turning point) against classified
    // uncovered Y. Relies on the cross-arm edge facts from stage 1.
    for &z in &y1_out {
        for idx in (1..rho.len()).step_by(2) {
            if board.edge(rho[idx], z, "covered-x-red-side") == Colour::Blue {
                // (r_s..r_{i+1}, r_{i−2}..r_1, x, z, r_i, b_t..b_1)
                let mut seq: Vec<Vertex> = rho[idx + 1..].iter().rev().copied().collect();
                seq.extend(rho[..idx - 1].iter().rev());
                seq.push(x);
                seq.push(z);
                seq.push(rho[idx]);
                seq.extend(beta.iter().rev());
                return Ok(Step::Seq(seq));
            }
        }
        for idx in (1..beta.len()).step_by(2) {
            if board.edge(beta[idx], z, "covered-x-red-side") == Colour::Blue {
                // (r_s..r_1, x, z, b_i..b_1, b_{i+2}..b_t)
                let mut seq: Vec<Vertex> = rho.iter().rev().copied().collect();
                seq.push(x);
                seq.push(z);
                seq.extend(beta[..=idx].iter().rev());
                seq.extend(beta[idx + 2..].iter());
                return Ok(Step::Seq(seq));
            }
        }
    }
    for &z in &y2_out {
        for idx in (1..beta.len()).step_by(2) {
            if board.edge(beta[idx], z, "covered-x-blue-side") == Colour::Red {
                let mut seq: Vec<Vertex> = beta[idx + 1..].iter().rev().copied().collect();
                seq.extend(beta[..idx - 1].iter().rev());
                seq.push(x);
                seq.push(z);
                seq.push(beta[idx]);
                seq.extend(rho.iter().rev());
                return Ok(Step::Seq(seq));
            }
        }
        for idx in (1..rho.len()).step_by(2) {
            if board.edge(rho[idx], z, "covered-x-blue-side") == Colour::Red {
                // (b_t..b_1, x, z, r_i..r_1, r_{i+2}..r_s)
                let mut seq: Vec<Vertex> = beta.iter().rev().copied().collect();
                seq.push(x);
                seq.push(z);
                seq.extend(rho[..=idx].iter().rev());
                seq.extend(rho[idx + 2..].iter());
                return Ok(Step::Seq(seq));
            }
        }
    }

    // Everything matched the split pattern: assemble the certificate.
    let mut x1: Vec<u32> = vec![x.index];
    x1.extend(rho.iter().chain(beta.iter()).filter(|v| v.side == Side::X).map(|v| v.index));
    let mut y1: Vec<u32> = rho.iter().filter(|v| v.side == Side::Y).map(|v| v.index).collect();
    y1.extend(y1_out.iter().map(|v| v.index));
    let mut y2: Vec<u32> = beta.iter().filter(|v| v.side == Side::Y).map(|v| v.index).collect();
    y2.extend(y2_out.iter().map(|v| v.index));
    let mut x2: Vec<u32> = x2.iter().map(|v| v.index).collect();
    x1.sort_unstable();
    x2.sort_unstable();
    y1.sort_unstable();
    y2.sort_unstable();
    Ok(Step::Cert(SplitCertificate { x1, x2, y1, y2 }))
}

/// Probes around one re-rooted turning point `u` with arms `rho` (red,
/// outward) and `beta` (blue, outward). A "wrong-colour" result yields a
/// replacement sequence; `None` means every probe matched the split
/// pattern: `u` is red to all Y vertices of `rho` and blue to all of
/// `beta`, the X vertices of `rho` are blue to `beta`'s far end and those
/// of `beta` red to `rho`'s far end.
fn turning_probes(
    board: &Board,
    rho: &[Vertex],
    u: Vertex,
    beta: &[Vertex],
    y_fresh: Vertex,
) -> Result<Option<Vec<Vertex>>> {
    let sigma = rho.len();
    let tau = beta.len();
    debug_assert!(sigma >= 1 && tau >= 1);
    let rho_far = rho[sigma - 1];
    let beta_far = beta[tau - 1];
    // Far end of the red arm back to the turning point.
    if board.edge(rho_far, u, "turning-red-far") == Colour::Blue {
        let mut seq: Vec<Vertex> = rho.to_vec();
        seq.push(u);
        seq.extend(beta.iter());
        return Ok(Some(seq));
    }
    if board.edge(beta_far, u, "turning-blue-far") == Colour::Red {
        let mut seq: Vec<Vertex> = beta.to_vec();
        seq.push(u);
        seq.extend(rho.iter());
        return Ok(Some(seq));
    }
    // X-class rho vertices against the blue arm's far end.
    for idx in (1..sigma).step_by(2) {
        if board.edge(rho[idx], beta_far, "turning-cross-red") == Colour::Red {
            // (ρ_{i−1}..ρ_1, u, ρ_σ..ρ_i, β_τ..β_1)
            let mut seq: Vec<Vertex> = rho[..idx].iter().rev().copied().collect();
            seq.push(u);
            seq.extend(rho[idx..].iter().rev());
            seq.extend(beta.iter().rev());
            return Ok(Some(seq));
        }
    }
    for idx in (1..tau).step_by(2) {
        if board.edge(beta[idx], rho_far, "turning-cross-blue") == Colour::Blue {
            let mut seq: Vec<Vertex> = beta[..idx].iter().rev().copied().collect();
            seq.push(u);
            seq.extend(beta[idx..].iter().rev());
            seq.extend(rho.iter().rev());
            return Ok(Some(seq));
        }
    }
    // Interior Y-class vertices of each arm against the turning point.
    for idx in (2..sigma - 1).step_by(2) {
        if board.edge(u, rho[idx], "turning-inner-red") == Colour::Blue {
            return inner_branch(board, rho, u, beta, idx, y_fresh, Colour::Red).map(Some);
        }
    }
    for idx in (2..tau - 1).step_by(2) {
        if board.edge(u, beta[idx], "turning-inner-blue") == Colour::Red {
            return inner_branch(board, beta, u, rho, idx, y_fresh, Colour::Blue).map(Some);
        }
    }
    Ok(None)
}

/// An interior chord `u`–`arm[j]` of the wrong colour splits the path into
/// a monochromatic path plus a cycle of the other colour through the fresh
/// vertex `y`. Either some probe grows the path immediately, or the cycle's
/// other-colour path is enlarged strictly until the two pieces merge into a
/// simple path covering everything plus `y`. `main` is the arm's colour.
fn inner_branch(
    board: &Board,
    arm: &[Vertex],
    u: Vertex,
    other: &[Vertex],
    j: usize,
    y: Vertex,
    main: Colour,
) -> Result<Vec<Vertex>> {
    debug_assert!(j >= 2 && j + 1 < arm.len());
    // If y reaches any Y-class arm vertex in the arm's own colour, the
    // path extends directly.
    for idx in (0..arm.len()).step_by(2) {
        if board.edge(y, arm[idx], "inner-fresh") == main {
            // (y, ρ_i..ρ_1, u, ρ_σ..ρ_{i+1}, β_1..β_τ)
            let mut seq = vec![y];
            seq.extend(arm[..=idx].iter().rev());
            seq.push(u);
            seq.extend(arm[idx + 1..].iter().rev());
            seq.extend(other.iter());
            return Ok(seq);
        }
    }
    // All such edges carry the other colour: the cycle
    // (ρ_{j−1}, β_τ..β_1, u, ρ_j, y, ρ_1) of the complementary colour
    // shares its two junction vertices with the remaining red path. Grow
    // the complementary path strictly until one of the closing chords
    // matches `main`.
    let mut seg_u: Vec<Vertex> = arm[j + 1..].to_vec();
    let mut seg_v: Vec<Vertex> = arm[..j].to_vec();
    // w runs from seg_v's last vertex to its first.
    let mut w: Vec<Vertex> = vec![arm[j - 1]];
    w.extend(other.iter().rev());
    w.push(u);
    w.push(arm[j]);
    w.push(y);
    w.push(arm[0]);
    loop {
        debug_assert_eq!(w[0], *seg_v.last().unwrap());
        debug_assert_eq!(*w.last().unwrap(), seg_v[0]);
        if seg_u.is_empty() {
            // (v_1..v_l, interior of w from the v_l end)
            let mut seq = seg_v.clone();
            seq.extend(w[1..w.len() - 1].iter());
            return Ok(seq);
        }
        if seg_u[0].side != seg_v[0].side {
            seg_u.reverse();
        }
        let u1 = seg_u[0];
        let uk = *seg_u.last().unwrap();
        let v1 = seg_v[0];
        let vl = *seg_v.last().unwrap();
        if board.edge(uk, v1, "inner-close-head") == main {
            let mut seq = seg_u.clone();
            seq.extend(seg_v.iter());
            seq.extend(w[1..w.len() - 1].iter());
            return Ok(seq);
        }
        if board.edge(u1, vl, "inner-close-tail") == main {
            let mut seq: Vec<Vertex> = seg_u.iter().rev().copied().collect();
            seq.extend(seg_v.iter().rev());
            seq.extend(w[1..w.len() - 1].iter().rev());
            return Ok(seq);
        }
        // Both chords carry the other colour: absorb seg_v's endpoints
        // into the complementary path and recurse on its interior.
        let mut w2 = vec![uk];
        w2.extend(w.iter().rev());
        w2.push(u1);
        let interior: Vec<Vertex> = seg_v[1..seg_v.len() - 1].to_vec();
        seg_v = std::mem::take(&mut seg_u);
        seg_u = interior;
        w = w2;
    }
}

/// Split a Hamiltonian simple path into a monochromatic cycle and a
/// monochromatic path of the complementary colour, both of even size,
/// together covering every vertex.
pub fn decompose_path_and_cycle(c: &Colouring, sp: &SimplePath) -> Result<PathCycleDecomposition> {
    let n = c.n();
    if sp.vertices.len() != 2 * n || !verify_simple_path(c, &sp.vertices, sp.turning) {
        return Err(Error::Precondition("decomposition needs a verified Hamiltonian simple path".into()));
    }
    let board = Board { c, transpose: false };
    let t = sp.turning;
    // Assign the turning vertex to whichever side makes both segments even.
    let (blue_part, red_part) = if t % 2 == 1 {
        (sp.vertices[..=t].to_vec(), sp.vertices[t + 1..].to_vec())
    } else {
        (sp.vertices[..t].to_vec(), sp.vertices[t..].to_vec())
    };
    debug_assert!(blue_part.len() % 2 == 0 && red_part.len() % 2 == 0);
    Ok(finish(&board, red_part, blue_part))
}

/// Core rotation: `r` is a red path, `b` a blue path, both even, jointly
/// covering the target vertex set. Probes at most two chords per round and
/// shrinks the red path by two vertices when no chord closes a cycle.
fn finish(board: &Board, mut r: Vec<Vertex>, mut b: Vec<Vertex>) -> PathCycleDecomposition {
    loop {
        if r.is_empty() {
            let chord = board.edge(b[0], *b.last().unwrap(), "close-blue");
            return if chord == Colour::Blue {
                PathCycleDecomposition {
                    cycle: Cycle::from_vertices(b, Colour::Blue),
                    path: MonoPath::empty(),
                }
            } else {
                let cycle = Cycle::edge(b[0], *b.last().unwrap(), Colour::Red);
                let interior = b[1..b.len() - 1].to_vec();
                let path = if interior.is_empty() {
                    MonoPath::empty()
                } else {
                    MonoPath::new(interior, Colour::Blue)
                };
                PathCycleDecomposition { cycle, path }
            };
        }
        if b.is_empty() {
            let chord = board.edge(r[0], *r.last().unwrap(), "close-red");
            return if chord == Colour::Red {
                PathCycleDecomposition {
                    cycle: Cycle::from_vertices(r, Colour::Red),
                    path: MonoPath::empty(),
                }
            } else {
                let cycle = Cycle::edge(r[0], *r.last().unwrap(), Colour::Blue);
                let interior = r[1..r.len() - 1].to_vec();
                let path = if interior.is_empty() {
                    MonoPath::empty()
                } else {
                    MonoPath::new(interior, Colour::Red)
                };
                PathCycleDecomposition { cycle, path }
            };
        }
        if b[0].side != r[0].side {
            b.reverse();
        }
        let (r1, ra) = (r[0], *r.last().unwrap());
        let (b1, bc) = (b[0], *b.last().unwrap());
        if board.edge(r1, ra, "chord-red") == Colour::Red {
            return PathCycleDecomposition {
                cycle: Cycle::from_vertices(r, Colour::Red),
                path: MonoPath::new(b, Colour::Blue),
            };
        }
        if board.edge(b1, bc, "chord-blue") == Colour::Blue {
            return PathCycleDecomposition {
                cycle: Cycle::from_vertices(b, Colour::Blue),
                path: MonoPath::new(r, Colour::Red),
            };
        }
        let g = board.edge(ra, b1, "chord-cross-head");
        let h = board.edge(r1, bc, "chord-cross-tail");
        match (g, h) {
            (Colour::Red, Colour::Red) => {
                // Red cycle (r_1..r_a, b_1, b_c): the b_1–b_c chord is
                // already known red.
                let mut cyc = r;
                cyc.push(b1);
                cyc.push(bc);
                let interior = b[1..b.len() - 1].to_vec();
                let path = if interior.is_empty() {
                    MonoPath::empty()
                } else {
                    MonoPath::new(interior, Colour::Blue)
                };
                return PathCycleDecomposition {
                    cycle: Cycle::from_vertices(cyc, Colour::Red),
                    path,
                };
            }
            (Colour::Blue, Colour::Blue) => {
                // Blue cycle (b_1..b_c, r_1, r_a): the r_1–r_a chord is
                // already known blue.
                let mut cyc = b;
                cyc.push(r1);
                cyc.push(ra);
                let interior = r[1..r.len() - 1].to_vec();
                let path = if interior.is_empty() {
                    MonoPath::empty()
                } else {
                    MonoPath::new(interior, Colour::Red)
                };
                return PathCycleDecomposition {
                    cycle: Cycle::from_vertices(cyc, Colour::Blue),
                    path,
                };
            }
            (Colour::Red, Colour::Blue) => {
                // (r_a, r_1, b_c..b_1): r_a–r_1 blue, r_1–b_c blue.
                let mut nb = vec![ra, r1];
                nb.extend(b.iter().rev());
                let nr = r[1..r.len() - 1].to_vec();
                r = nr;
                b = nb;
            }
            (Colour::Blue, Colour::Red) => {
                // (r_1, r_a, b_1..b_c): r_1–r_a blue, r_a–b_1 blue.
                let mut nb = vec![r1, ra];
                nb.extend(b.iter());
                let nr = r[1..r.len() - 1].to_vec();
                r = nr;
                b = nb;
            }
        }
    }
}
