//! Colouring generators: the extremal three-cycle family, split colourings
//! with prescribed block sizes, seeded random colourings, and exhaustive
//! enumeration for small sizes.

use crate::colouring::{Colour, Colouring};
use crate::error::{Error, Result};
use crate::split::SplitCertificate;

/// The extremal family requiring three cycles: blue edges are
/// `x1y1`, `x2y2`, all of `x1`'s and `y1`'s other edges except `x1y2`/`x2y1`,
/// and `x2yj` for `j ≥ 4`; everything else is red.
pub fn gen_proposition7(n: usize) -> Result<Colouring> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("extremal family needs n >= 3, got {n}")));
    }
    Ok(Colouring::from_fn(n, |i, j| {
        let blue = (i == 1 && j == 1)
            || (i == 2 && j == 2)
            || (i == 1 && j >= 3)
            || (j == 1 && i >= 3)
            || (i == 2 && j >= 4);
        if blue {
            Colour::Blue
        } else {
            Colour::Red
        }
    }))
}

/// A split colouring with `X1 = {1..a}`, `Y1 = {1..b}` in a board of size
/// `n`: red inside the diagonal blocks `X1×Y1` and `X2×Y2`, blue across.
/// Returns the colouring together with its canonical certificate.
pub fn gen_split(a: usize, b: usize, n: usize) -> Result<(Colouring, SplitCertificate)> {
    if a == 0 || b == 0 || a >= n || b >= n {
        return Err(Error::OutOfRange(format!(
            "split blocks need 1 <= a,b < n; got a={a}, b={b}, n={n}"
        )));
    }
    let c = Colouring::from_fn(n, |i, j| {
        let xi1 = (i as usize) <= a;
        let yj1 = (j as usize) <= b;
        if xi1 == yj1 {
            Colour::Red
        } else {
            Colour::Blue
        }
    });
    let cert = SplitCertificate {
        x1: (1..=a as u32).collect(),
        x2: (a as u32 + 1..=n as u32).collect(),
        y1: (1..=b as u32).collect(),
        y2: (b as u32 + 1..=n as u32).collect(),
    };
    Ok((c, cert))
}

/// SplitMix64: tiny, statistically solid, trivially reproducible across
/// platforms. One output per call.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }
}

/// A seeded random colouring: cells are drawn row-major, each red with
/// probability `p_red` (compared against the draw as a 64-bit fraction).
pub fn gen_random(n: usize, seed: u64, p_red: f64) -> Result<Colouring> {
    if !(0.0..=1.0).contains(&p_red) {
        return Err(Error::OutOfRange(format!("p_red must be in [0,1], got {p_red}")));
    }
    let threshold = (p_red * 2f64.powi(64)) as u128;
    let mut rng = SplitMix64::new(seed);
    let mut cells = Vec::with_capacity(n * n);
    for _ in 0..n * n {
        let r = rng.next_u64();
        cells.push(if (r as u128) < threshold { Colour::Red } else { Colour::Blue });
    }
    Ok(Colouring::from_fn(n, |i, j| cells[(i as usize - 1) * n + (j as usize - 1)]))
}

/// All `2^(n²)` colourings of the `n × n` board in a fixed lexicographic
/// order: cell `(1,1)` is the most significant position, red before blue,
/// so index 0 is the all-red board. Only sensible for `n ≤ 4`.
pub fn enumerate_all(n: usize) -> Result<impl Iterator<Item = Colouring>> {
    if n == 0 || n > 4 {
        return Err(Error::OutOfRange(format!("exhaustive enumeration supports 1 <= n <= 4, got {n}")));
    }
    let bits = n * n;
    Ok((0u64..1 << bits).map(move |idx| {
        Colouring::from_fn(n, |i, j| {
            let pos = (i as usize - 1) * n + (j as usize - 1);
            // Earlier cells are more significant; bit 0 means red.
            if idx >> (bits - 1 - pos) & 1 == 0 {
                Colour::Red
            } else {
                Colour::Blue
            }
        })
    }))
}

/// A constant colouring, every edge the same colour.
pub fn gen_const(n: usize, colour: Colour) -> Colouring {
    Colouring::from_fn(n, |_, _| colour)
}
