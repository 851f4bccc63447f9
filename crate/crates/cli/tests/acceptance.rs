//! Acceptance gate: eleven end-to-end criteria, one test (and thus one
//! pass/fail line) each. Every criterion is zero-tolerance over its stated
//! instance set; nothing here is sampled down below the stated sizes.

use std::collections::BTreeSet;
use std::process::Command;

use rayon::prelude::*;

use monocycle::batch::batch_solve;
use monocycle::colouring::{Colour, Colouring, MonoPath, Side, Vertex};
use monocycle::gen::{enumerate_all, gen_proposition7, gen_random, gen_split, SplitMix64};
use monocycle::oracle::{exists_two_cycle_bicolour_partition, min_cycle_partition};
use monocycle::simplepath::{decompose_path_and_cycle, find_hamiltonian_simple_path, PathOrSplit};
use monocycle::solver::partition_le4;
use monocycle::split::{detect_split, partition_split};
use monocycle::verify::{verify_partition, verify_split};
use monocycle::zigzag::{canonical_path, partition_three, weak_partition, zigzag_labelling, WeakCondition};

fn workers() -> usize {
    std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1)
}

/// All colourings of the given size whose canonical zigzag path is red,
/// enumerating every assignment of the remaining free edges.
fn red_path_boards(m: usize) -> Vec<Colouring> {
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
    let free: Vec<(usize, usize)> = (1..=m)
        .flat_map(|i| (1..=m).map(move |j| (i, j)))
        .filter(|&(i, j)| !on_path[i][j])
        .collect();
    (0u64..1 << free.len())
        .map(|mask| {
            Colouring::from_fn(m, |i, j| {
                if on_path[i as usize][j as usize] {
                    Colour::Red
                } else {
                    let bit = free.iter().position(|&p| p == (i as usize, j as usize)).unwrap();
                    if mask >> bit & 1 == 1 {
                        Colour::Red
                    } else {
                        Colour::Blue
                    }
                }
            })
        })
        .collect()
}

/// Criterion 1: every colouring with n ≤ 4 partitions into at most four
/// verified monochromatic cycles.
#[test]
fn criterion_01_every_small_board_partitions_into_at_most_four() {
    for n in 1..=4 {
        let cs: Vec<Colouring> = enumerate_all(n).unwrap().collect();
        let out = batch_solve(&cs, workers()).unwrap();
        assert_eq!(out.len(), cs.len());
        for s in &out {
            assert!(s.cycle_count <= 4, "n={n} instance {} used {} cycles", s.index, s.cycle_count);
            assert!(s.verified, "n={n} instance {} failed verification", s.index);
        }
    }
    println!("criterion 01 PASS: exhaustive n<=4, all partitions verified with <=4 cycles");
}

/// Criterion 2: the oracle minimum never exceeds the solver's count and
/// its witness verifies, exhaustively for n ≤ 3 and on 10^4 random n=4-5.
#[test]
fn criterion_02_oracle_minimum_bounds_solver_count() {
    let mut cs: Vec<Colouring> = Vec::new();
    for n in 1..=3 {
        cs.extend(enumerate_all(n).unwrap());
    }
    for i in 0..10_000u64 {
        let n = if i % 2 == 0 { 4 } else { 5 };
        cs.push(gen_random(n, 0x0c2a_0000 + i, 0.5).unwrap());
    }
    cs.par_iter().for_each(|c| {
        let s = partition_le4(c).unwrap();
        let r = min_cycle_partition(c, 6).unwrap();
        assert!(r.minimum <= s.partition.len());
        assert!(verify_partition(c, &r.witness).valid);
        assert_eq!(r.witness.cycles.len(), r.minimum);
    });
    println!("criterion 02 PASS: oracle minimum <= solver count with verifying witnesses");
}

/// Criterion 3: split boards of every block signature with n ≤ 5 partition
/// into at most three cycles, into exactly two iff |X1| ∈ {|Y1|, |Y2|},
/// and the oracle minimum is 2 exactly in those cases.
#[test]
fn criterion_03_split_partitions_match_block_signatures() {
    for n in 2..=5 {
        for a in 1..n {
            for b in 1..n {
                let (c, cert) = gen_split(a, b, n).unwrap();
                let p = partition_split(&c, &cert).unwrap();
                assert!(verify_partition(&c, &p).valid);
                assert!(p.len() <= 3);
                let two_feasible = a == b || a == n - b;
                assert_eq!(p.len() == 2, two_feasible, "n={n} a={a} b={b}");
                let r = min_cycle_partition(&c, 6).unwrap();
                assert_eq!(r.minimum == 2, two_feasible, "n={n} a={a} b={b}");
            }
        }
    }
    println!("criterion 03 PASS: split corpus n<=5, cycle counts and oracle minima match signatures");
}

/// Criterion 4: no split board with n ≤ 5 admits a partition into two
/// cycles of different colours.
#[test]
fn criterion_04_split_boards_never_split_into_two_bicoloured_cycles() {
    for n in 2..=5 {
        for a in 1..n {
            for b in 1..n {
                let (c, _) = gen_split(a, b, n).unwrap();
                assert!(!exists_two_cycle_bicolour_partition(&c, 6).unwrap(), "n={n} a={a} b={b}");
            }
        }
    }
    println!("criterion 04 PASS: no two-cycle bicoloured partition on the split corpus");
}

/// Criterion 5: the extremal family carries its red Hamiltonian zigzag
/// path edge by edge, and its exact minimum is three.
#[test]
fn criterion_05_extremal_family_has_red_path_and_minimum_three() {
    for n in 3..=6 {
        let c = gen_proposition7(n).unwrap();
        // (x1, y2, x3, y4, x4, y5, x5, …, yn, xn, y3, x2, y1)
        let mut path = vec![Vertex::x(1), Vertex::y(2), Vertex::x(3)];
        for i in 4..=n as u32 {
            path.push(Vertex::y(i));
            path.push(Vertex::x(i));
        }
        path.extend([Vertex::y(3), Vertex::x(2), Vertex::y(1)]);
        assert_eq!(path.len(), 2 * n);
        for w in path.windows(2) {
            let (a, b) = (w[0], w[1]);
            let (i, j) = if a.side == Side::X { (a.index, b.index) } else { (b.index, a.index) };
            assert_eq!(c.colour(i, j), Colour::Red, "n={n}: edge x{i}y{j} is not red");
        }
        assert_eq!(min_cycle_partition(&c, 6).unwrap().minimum, 3, "n={n}");
    }
    println!("criterion 05 PASS: extremal family red Hamiltonian path verified, oracle minimum 3");
}

/// Criterion 6: the path engine is total on n ≤ 4 — a verifying
/// Hamiltonian simple path exactly on non-split boards, a verifying split
/// certificate otherwise.
#[test]
fn criterion_06_engine_is_total_on_small_boards() {
    for n in 1..=4 {
        let cs: Vec<Colouring> = enumerate_all(n).unwrap().collect();
        cs.par_iter().for_each(|c| {
            let split = detect_split(c).is_some();
            match find_hamiltonian_simple_path(c).unwrap() {
                PathOrSplit::Path(sp) => {
                    assert!(!split, "engine returned a path on a split board\n{}", c.to_text());
                    assert_eq!(sp.vertices.len(), 2 * n);
                }
                PathOrSplit::Split(cert) => {
                    assert!(split, "engine returned a certificate on a non-split board\n{}", c.to_text());
                    assert!(verify_split(c, &cert));
                }
            }
        });
    }
    println!("criterion 06 PASS: engine exhaustive n<=4, path iff non-split, all outputs verify");
}

/// Criterion 7: the path-to-cycle converter always yields an even cycle
/// and an even path of complementary colours that partition the vertices.
#[test]
fn criterion_07_converter_yields_even_complementary_pieces() {
    let mut cs: Vec<Colouring> = Vec::new();
    for n in 1..=4 {
        cs.extend(enumerate_all(n).unwrap().filter(|c| detect_split(c).is_none()));
    }
    let exhaustive = cs.len();
    let mut rng = SplitMix64::new(0xdec0_0001);
    while cs.len() < exhaustive + 10_000 {
        let n = 5 + (rng.next_u64() % 28) as usize;
        let c = gen_random(n, rng.next_u64(), 0.5).unwrap();
        if detect_split(&c).is_none() {
            cs.push(c);
        }
    }
    cs.par_iter().for_each(|c| {
        let sp = match find_hamiltonian_simple_path(c).unwrap() {
            PathOrSplit::Path(sp) => sp,
            PathOrSplit::Split(_) => unreachable!("corpus is non-split"),
        };
        let dec = decompose_path_and_cycle(c, &sp).unwrap();
        assert_eq!(dec.cycle.len() % 2, 0);
        assert_eq!(dec.path.len() % 2, 0);
        let cycle_colour = dec.cycle.colour_tag;
        // Cycle edges all carry the cycle colour.
        if dec.cycle.len() >= 2 {
            let col = cycle_colour.unwrap();
            let k = dec.cycle.len();
            let edges = if k == 2 { 1 } else { k };
            for e in 0..edges {
                let (a, b) = (dec.cycle.vertices[e], dec.cycle.vertices[(e + 1) % k]);
                let (i, j) = if a.side == Side::X { (a.index, b.index) } else { (b.index, a.index) };
                assert_eq!(c.colour(i, j), col);
            }
        }
        // Path edges all carry the complementary colour.
        if dec.path.len() >= 2 {
            let col = dec.path.colour_tag.unwrap();
            assert_ne!(Some(col), cycle_colour, "colours must differ");
            for w in dec.path.vertices.windows(2) {
                let (a, b) = (w[0], w[1]);
                let (i, j) = if a.side == Side::X { (a.index, b.index) } else { (b.index, a.index) };
                assert_eq!(c.colour(i, j), col);
            }
        }
        // The two pieces partition the vertex set.
        let mut seen: BTreeSet<Vertex> = BTreeSet::new();
        for &v in dec.cycle.vertices.iter().chain(&dec.path.vertices) {
            assert!(seen.insert(v), "vertex covered twice");
        }
        assert_eq!(seen.len(), 2 * c.n());
    });
    println!("criterion 07 PASS: converter even/complementary/partitioning on {} instances", cs.len());
}

/// Criterion 8: the weak partition's reported condition holds literally on
/// every red-zigzag board with m ≤ 4.
#[test]
fn criterion_08_weak_partition_tags_hold_literally() {
    for m in 1..=4 {
        for c in red_path_boards(m) {
            let ham = MonoPath::new(canonical_path(m), Colour::Red);
            let z = zigzag_labelling(&c, &ham).unwrap();
            let r = weak_partition(&z).unwrap();
            let p = z.view().translate_partition(&r.partition);
            assert!(verify_partition(&c, &p).valid);
            let blue_with = |a: Vertex, b: Vertex| {
                p.cycles.iter().any(|cy| {
                    cy.colour_tag != Some(Colour::Red) && cy.has_adjacent_pair(a, b)
                })
            };
            match r.condition {
                WeakCondition::TwoCycles => assert!(p.len() <= 2),
                WeakCondition::ThreeWithDiagonal => {
                    assert!(p.len() <= 3);
                    assert!(blue_with(Vertex::x(1), Vertex::y(1)), "x1y1 not in a blue cycle");
                }
                WeakCondition::FourWithSplitDiagonals => {
                    assert!(p.len() <= 4);
                    assert!(blue_with(Vertex::x(1), Vertex::y(1)));
                    assert!(blue_with(Vertex::x(2), Vertex::y(2)));
                    let holder = |a: Vertex, b: Vertex| {
                        p.cycles.iter().position(|cy| cy.has_adjacent_pair(a, b)).unwrap()
                    };
                    assert_ne!(
                        holder(Vertex::x(1), Vertex::y(1)),
                        holder(Vertex::x(2), Vertex::y(2)),
                        "diagonals share a cycle"
                    );
                }
            }
        }
    }
    println!("criterion 08 PASS: weak partition condition tags literal on all red-zigzag m<=4");
}

/// Criterion 9: 10^5 random boards containing a red Hamiltonian zigzag
/// path, m ∈ 5..=12, all partition into at most three verified cycles.
#[test]
fn criterion_09_hundred_thousand_path_boards_partition_into_three() {
    let cases: Vec<(usize, u64)> = (0..100_000u64).map(|i| (5 + (i % 8) as usize, i)).collect();
    cases.par_iter().for_each(|&(m, seed)| {
        let mut rng = SplitMix64::new(0x1e6_0000 + seed);
        let denom = 2 + seed % 14;
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
            if on_path[i as usize][j as usize] || rng.next_u64().is_multiple_of(denom) {
                Colour::Red
            } else {
                Colour::Blue
            }
        });
        let ham = MonoPath::new(canonical_path(m), Colour::Red);
        let z = zigzag_labelling(&c, &ham).unwrap();
        let p = partition_three(&z).unwrap();
        assert!(p.len() <= 3, "m={m} seed={seed}: {} cycles", p.len());
        let base = z.view().translate_partition(&p);
        assert!(verify_partition(&c, &base).valid, "m={m} seed={seed}");
    });
    println!("criterion 09 PASS: 100000 path-bearing boards, all <=3 verified cycles");
}

/// Criterion 10: a random n = 2000 instance solves within ten seconds and
/// one GiB.
#[test]
fn criterion_10_large_instance_performance() {
    let c = gen_random(2000, 0xbead_5eed, 0.5).unwrap();
    let start = std::time::Instant::now();
    let s = partition_le4(&c).unwrap();
    let elapsed = start.elapsed();
    assert!(s.partition.len() <= 4);
    assert!(s.verified);
    assert!(elapsed.as_secs_f64() <= 10.0, "took {elapsed:?}");
    let peak_gib = std::fs::read_to_string("/proc/self/status")
        .ok()
        .and_then(|text| {
            text.lines().find(|l| l.starts_with("VmHWM:")).and_then(|l| {
                l.split_whitespace().nth(1).and_then(|kb| kb.parse::<f64>().ok())
            })
        })
        .map(|kb| kb / (1024.0 * 1024.0));
    if let Some(gib) = peak_gib {
        assert!(gib <= 1.0, "peak memory {gib:.3} GiB");
    }
    println!(
        "criterion 10 PASS: n=2000 solved in {elapsed:?}{}",
        peak_gib.map(|g| format!(", peak {g:.3} GiB")).unwrap_or_default()
    );
}

/// Criterion 11: the minimum-4 hunt over exhaustive n=4 completes, reports
/// its (possibly empty) witness list, and reruns byte-identically.
#[test]
fn criterion_11_hunt_four_is_exhaustive_and_reproducible() {
    let run = || {
        let dir = tempfile::tempdir().unwrap();
        let out = Command::new(env!("CARGO_BIN_EXE_monocycle"))
            .args([
                "experiment",
                "--family",
                "exhaustive",
                "--n-min",
                "4",
                "--hunt-four",
                "--witness-dir",
                dir.path().to_str().unwrap(),
            ])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        out.stdout
    };
    let a = run();
    let b = run();
    assert_eq!(a, b, "reruns differ");
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["instances"], 65536);
    let witnesses = v["four_witnesses"].as_array().unwrap();
    println!(
        "criterion 11 PASS: hunt-four exhaustive n=4 reproducible, {} minimum-4 witnesses",
        witnesses.len()
    );
}
