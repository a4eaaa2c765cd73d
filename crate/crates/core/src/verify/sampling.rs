//! Deterministic point sets: Halton lattices for grids, a seeded ChaCha
//! stream for random pairs, and per-piece rejection samplers.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hyp::{fermi_c, uhp_c, FermiCoord};
use crate::pants::Region;
use crate::qcmap::{lower, MapAssembly};

/// Hyperbolic clearance kept from seams and sides when sampling
/// derivatives.
pub const SEAM_CLEARANCE: f64 = 1e-4;

/// Radical inverse of `index` in `base`.
pub fn radical_inverse(mut index: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let mut scale = inv;
    let mut out = 0.0;
    while index > 0 {
        out += (index % base) as f64 * scale;
        index /= base;
        scale *= inv;
    }
    out
}

/// Points of the unit square, either a 2-3 Halton sequence or seeded
/// uniform draws.
#[derive(Debug, Clone)]
pub enum UnitSquare {
    Halton { next: u64 },
    Random(ChaCha8Rng),
}

impl UnitSquare {
    pub fn halton() -> Self {
        UnitSquare::Halton { next: 1 }
    }

    pub fn random(seed: u64) -> Self {
        UnitSquare::Random(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn next_point(&mut self) -> (f64, f64) {
        match self {
            UnitSquare::Halton { next } => {
                let k = *next;
                *next += 1;
                (radical_inverse(k, 2), radical_inverse(k, 3))
            }
            UnitSquare::Random(rng) => (rng.random::<f64>(), rng.random::<f64>()),
        }
    }
}

/// Lower region by Fermi `t`, seam points going to the left piece.
pub(crate) fn lower_region(asm: &MapAssembly, t: f64) -> Region {
    let h = &asm.hex;
    if t <= -h.eta1 {
        Region::OuterLeft
    } else if t <= 0.0 {
        Region::InnerLeft
    } else if t <= h.eta2 {
        Region::InnerRight
    } else {
        Region::OuterRight
    }
}

/// Smallest (hyperbolic) distance from `z` to a side of the hexagon or to a
/// seam of `φ`.
pub fn seam_clearance(asm: &MapAssembly, z: Complex64) -> f64 {
    let h = &asm.hex;
    let mut d = h
        .side_margins(z)
        .iter()
        .fold(f64::INFINITY, |m, &v| m.min(v));
    let beta = (h.signed_dist_to_alpha3(z) + h.w).abs();
    d = d.min(beta);
    if h.region_of(z).is_lower() {
        let c = fermi_c(z);
        for t0 in [-h.eta1, 0.0, h.eta2] {
            d = d.min(((c.t - t0).sinh() * c.r.cosh()).asinh().abs());
        }
        let y = lower::f_beta_c(h, z).im;
        d = d.min((y / h.a).ln().abs());
    }
    d
}

/// Fermi box `[t_lo, t_hi] × [0, r_max]` around a lower region.
fn fermi_box(asm: &MapAssembly, region: Region) -> (f64, f64, f64) {
    let h = &asm.hex;
    let (lo, hi) = h.beta_range();
    let mut r_max = fermi_c(h.v_a1.to_complex())
        .r
        .max(fermi_c(h.v_a2.to_complex()).r);
    for k in 0..=64 {
        let s = lo + (hi - lo) * k as f64 / 64.0;
        r_max = r_max.max(fermi_c(h.beta_c(s)).r);
    }
    let (t_lo, t_hi) = match region {
        Region::OuterLeft => (-h.c1, -h.eta1),
        Region::InnerLeft => (-h.eta1, 0.0),
        Region::InnerRight => (0.0, h.eta2),
        Region::OuterRight => (h.eta2, h.c2),
        Region::Upper => unreachable!("the upper piece is sampled through F^β"),
    };
    (t_lo, t_hi, 1.0001 * r_max)
}

/// Up to `n` points of `region` with clearance at least `clearance`,
/// accepted by `keep`. The upper piece is parametrized through the
/// rectangle `F^β(ℋ^β)` with log-uniform height.
pub fn sample_region<K>(
    asm: &MapAssembly,
    region: Region,
    n: usize,
    clearance: f64,
    source: &mut UnitSquare,
    keep: K,
) -> Vec<Complex64>
where
    K: Fn(Complex64) -> bool,
{
    let h = &asm.hex;
    let mut out = Vec::with_capacity(n);
    let max_attempts = 400 * n.max(1);
    let mut draw: Box<dyn FnMut(&mut UnitSquare) -> Complex64> = match region {
        Region::Upper => {
            let top = 1.0 + asm.big_w / h.eps;
            Box::new(move |src: &mut UnitSquare| {
                let (u, v) = src.next_point();
                let q = Complex64::new(h.a1 + h.a * u, 2.0 * h.a * top.powf(v));
                asm.f_upper_inverse_c(q)
            })
        }
        _ => {
            let (t_lo, t_hi, r_max) = fermi_box(asm, region);
            Box::new(move |src: &mut UnitSquare| {
                let (u, v) = src.next_point();
                uhp_c(FermiCoord::new(t_lo + (t_hi - t_lo) * u, r_max * v))
            })
        }
    };
    for _ in 0..max_attempts {
        if out.len() == n {
            break;
        }
        let z = draw(source);
        if !(z.im > 0.0) || h.region_of(z) != region {
            continue;
        }
        if seam_clearance(asm, z) >= clearance && keep(z) {
            out.push(z);
        }
    }
    out
}

/// Seeded RNG for random pairs and points.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
