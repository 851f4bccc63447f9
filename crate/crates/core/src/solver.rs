//! Top-level orchestration: partition any colouring into at most four
//! vertex-disjoint monochromatic cycles, with a certificate of how the
//! partition was obtained.
//!
//! Split colourings get at most three cycles directly from their block
//! structure. Every other colouring yields a Hamiltonian simple path, which
//! splits into a monochromatic cycle plus a monochromatic path of the other
//! colour; the path spans a balanced sub-board that is relabelled into
//! zigzag form and partitioned into at most three cycles, for at most four
//! in total. Every returned partition is re-checked by the verifier before
//! it leaves this module.

use serde::{Deserialize, Serialize};

use crate::colouring::{Colour, Colouring, Cycle, CycleKind, Partition, Side, Vertex};
use crate::error::{Error, Result};
use crate::simplepath::{
    decompose_path_and_cycle, find_hamiltonian_simple_path, PathOrSplit, SimplePath,
};
use crate::split::{detect_split, partition_split, SplitCertificate};
use crate::verify::verify_partition;
use crate::zigzag::{partition_three, zigzag_labelling};

/// Which branch of the case analysis produced the solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Split,
    NonSplit,
}

/// How the partition was obtained: the split certificate, or the
/// Hamiltonian simple path together with its cycle-plus-path decomposition.
#[derive(Debug, Clone)]
pub enum SolutionTrace {
    Split(SplitCertificate),
    NonSplit {
        simple_path: SimplePath,
        cycle: Cycle,
        path_colour: Option<Colour>,
    },
}

/// A verified partition into at most four monochromatic cycles.
#[derive(Debug, Clone)]
pub struct Solution {
    pub n: usize,
    pub partition: Partition,
    pub route: Route,
    pub trace: SolutionTrace,
    pub verified: bool,
}

/// Partition the vertices of `c` into at most four vertex-disjoint
/// monochromatic cycles (at most three when `c` is split).
///
/// The returned solution always verifies; a partition that fails the
/// verifier, exceeds its cycle budget, or a disagreement between the split
/// detector and the path engine is reported as an internal error, never as
/// a degraded answer.
pub fn partition_le4(c: &Colouring) -> Result<Solution> {
    let n = c.n();
    if let Some(cert) = detect_split(c) {
        let partition = partition_split(c, &cert)?;
        if partition.len() > 3 {
            return Err(Error::Internal(format!(
                "split branch produced {} cycles, expected at most 3",
                partition.len()
            )));
        }
        return finish(c, n, partition, Route::Split, SolutionTrace::Split(cert));
    }

    let sp = match find_hamiltonian_simple_path(c)? {
        PathOrSplit::Path(sp) => sp,
        PathOrSplit::Split(_) => {
            return Err(Error::Internal(
                "path engine returned a split certificate on a non-split colouring".into(),
            ))
        }
    };
    let dec = decompose_path_and_cycle(c, &sp)?;
    let mut cycles = Vec::new();
    let path_colour;
    if dec.path.is_empty() {
        path_colour = None;
    } else if dec.path.len() == 2 {
        let col = dec.path.colour_tag.ok_or_else(|| {
            Error::Internal("decomposition path is missing its colour tag".into())
        })?;
        path_colour = Some(col);
        cycles.push(Cycle::edge(dec.path.vertices[0], dec.path.vertices[1], col));
    } else {
        path_colour = dec.path.colour_tag;
        let z = zigzag_labelling(c, &dec.path)?;
        let sub = partition_three(&z)?;
        let translated = z.view().translate_partition(&sub);
        cycles.extend(translated.cycles);
    }
    cycles.push(dec.cycle.clone());
    let trace = SolutionTrace::NonSplit {
        simple_path: sp,
        cycle: dec.cycle,
        path_colour,
    };
    finish(c, n, Partition::new(cycles), Route::NonSplit, trace)
}

fn finish(
    c: &Colouring,
    n: usize,
    partition: Partition,
    route: Route,
    trace: SolutionTrace,
) -> Result<Solution> {
    if partition.len() > 4 {
        return Err(Error::Internal(format!(
            "partition has {} cycles, expected at most 4",
            partition.len()
        )));
    }
    let report = verify_partition(c, &partition);
    if !report.valid {
        return Err(Error::Internal(format!(
            "constructed partition failed verification: {}",
            report.failure.as_deref().unwrap_or("unspecified")
        )));
    }
    Ok(Solution { n, partition, route, trace, verified: true })
}

/// Wire format for a solution. Field order matches the emitted JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionJson {
    pub n: usize,
    pub route: String,
    pub cycles: Vec<CycleJson>,
    pub verified: bool,
}

/// Wire format for one cycle: `kind` is `singleton`, `edge`, or `proper`;
/// `colour` is `red`, `blue`, or null (singletons carry no colour);
/// vertices are written as `x3`, `y1`, ….
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleJson {
    pub kind: String,
    pub colour: Option<String>,
    pub vertices: Vec<String>,
}

/// The `x3` / `y1` vertex spelling used in the wire format.
pub fn vertex_name(v: Vertex) -> String {
    match v.side {
        Side::X => format!("x{}", v.index),
        Side::Y => format!("y{}", v.index),
    }
}

/// Parse the `x3` / `y1` vertex spelling.
pub fn parse_vertex_name(s: &str) -> Result<Vertex> {
    let err = || Error::Parse {
        line: 1,
        col: 1,
        msg: format!("expected a vertex like 'x3' or 'y1', got '{s}'"),
    };
    let (side, digits) = s.split_at(1);
    let index: u32 = digits.parse().map_err(|_| err())?;
    if index == 0 {
        return Err(err());
    }
    match side {
        "x" => Ok(Vertex::x(index)),
        "y" => Ok(Vertex::y(index)),
        _ => Err(err()),
    }
}

impl Cycle {
    /// Convert to the wire format.
    pub fn to_json(&self) -> CycleJson {
        CycleJson {
            kind: match self.kind {
                CycleKind::Singleton => "singleton",
                CycleKind::EdgeCycle => "edge",
                CycleKind::Proper => "proper",
            }
            .to_string(),
            colour: self.colour_tag.map(|col| {
                match col {
                    Colour::Red => "red",
                    Colour::Blue => "blue",
                }
                .to_string()
            }),
            vertices: self.vertices.iter().map(|&v| vertex_name(v)).collect(),
        }
    }
}

impl Solution {
    /// Convert to the wire format.
    pub fn to_json(&self) -> SolutionJson {
        SolutionJson {
            n: self.n,
            route: match self.route {
                Route::Split => "split",
                Route::NonSplit => "nonsplit",
            }
            .to_string(),
            cycles: self.partition.cycles.iter().map(Cycle::to_json).collect(),
            verified: self.verified,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::build_colouring;
    use crate::gen::{enumerate_all, gen_const, gen_proposition7, gen_random};
    use crate::oracle::min_cycle_partition;

    #[test]
    fn minimal_split_board_uses_two_cycles() {
        let c = build_colouring(2, &["RB", "BR"]).unwrap();
        let s = partition_le4(&c).unwrap();
        assert_eq!(s.route, Route::Split);
        assert_eq!(s.partition.len(), 2);
        assert!(s.verified);
    }

    #[test]
    fn all_red_board_is_one_hamiltonian_cycle() {
        let c = gen_const(5, Colour::Red);
        let s = partition_le4(&c).unwrap();
        assert_eq!(s.route, Route::NonSplit);
        assert_eq!(s.partition.len(), 1);
        assert_eq!(s.partition.cycles[0].len(), 10);
    }

    #[test]
    fn alternating_family_needs_exactly_three() {
        let c = gen_proposition7(4).unwrap();
        let s = partition_le4(&c).unwrap();
        assert_eq!(s.route, Route::NonSplit);
        assert_eq!(s.partition.len(), 3);
        let oracle = min_cycle_partition(&c, 6).unwrap();
        assert_eq!(oracle.minimum, 3);
    }

    #[test]
    fn route_agrees_with_split_detection_exhaustively() {
        for n in 1..=3 {
            for c in enumerate_all(n).unwrap() {
                let s = partition_le4(&c).unwrap();
                let split = detect_split(&c).is_some();
                assert_eq!(s.route == Route::Split, split, "n={n}\n{}", c.to_text());
                assert!(s.partition.len() <= 4);
                if split {
                    assert!(s.partition.len() <= 3);
                }
            }
        }
    }

    #[test]
    fn random_boards_partition_and_verify() {
        for n in [5usize, 8, 12, 16] {
            for seed in 0..200u64 {
                let c = gen_random(n, 0x50_1e_00 + seed * 131 + n as u64, 0.5).unwrap();
                let s = partition_le4(&c).unwrap();
                assert!(s.partition.len() <= 4);
                assert!(s.verified);
            }
        }
    }

    #[test]
    fn json_round_trips_and_matches_schema() {
        let c = build_colouring(2, &["RB", "BR"]).unwrap();
        let s = partition_le4(&c).unwrap();
        let json = serde_json::to_string(&s.to_json()).unwrap();
        assert!(json.starts_with("{\"n\":2,\"route\":\"split\",\"cycles\":["));
        assert!(json.ends_with("\"verified\":true}"));
        let back: SolutionJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s.to_json());
    }

    #[test]
    fn vertex_names_round_trip() {
        for v in [Vertex::x(1), Vertex::y(3), Vertex::x(2000)] {
            assert_eq!(parse_vertex_name(&vertex_name(v)).unwrap(), v);
        }
        assert!(parse_vertex_name("z3").is_err());
        assert!(parse_vertex_name("x0").is_err());
        assert!(parse_vertex_name("x").is_err());
    }
}
