//! The quasiconformal embedding `φ : Y_{l1,l2,ε} → Y^{ε*}_{l1,l2}`.
//!
//! `φ` is built on the front hexagon `ℋ` and acts the same way on the back
//! hexagon. Below `β` it is `H_β ∘ G_β ∘ F_β` (see [`lower`]), above `β` it
//! is `G^β ∘ F^β` (see [`upper`]). The target hexagon `ℋ'` is bounded by `c'`
//! on `Γ`, the sides `α'_i` and the vertical lines `x = a_i`, and is cut off
//! at height `2a/ε*`.

pub mod lower;
mod table;
pub mod upper;

use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyp::{fermi_c, uhp_c, FermiCoord, HalfPlanePoint};
use crate::pants::{reduced_collar, solve_hexagon, HexagonSolution, Region, YPieceParams};

pub use lower::f_beta;
pub use table::CurveTable;

/// Side of the Y-piece: the front hexagon `ℋ` or its mirror image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sheet {
    Front,
    Back,
}

impl Sheet {
    pub fn as_str(&self) -> &'static str {
        match self {
            Sheet::Front => "front",
            Sheet::Back => "back",
        }
    }
}

impl std::str::FromStr for Sheet {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "front" => Ok(Sheet::Front),
            "back" => Ok(Sheet::Back),
            other => Err(format!("unknown sheet {other:?}")),
        }
    }
}

/// A point of the Y-piece given in the chart of its hexagon.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurfacePoint {
    pub sheet: Sheet,
    pub z: HalfPlanePoint,
}

impl SurfacePoint {
    pub fn front(z: HalfPlanePoint) -> Self {
        Self {
            sheet: Sheet::Front,
            z,
        }
    }
}

/// A smooth piece of `φ`. Below `β` a piece is an `F_β` branch together
/// with whether its image lies above `y = a`, where `G_β` and `H_β` act.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Piece {
    Lower { region: Region, stretched: bool },
    Upper,
}

/// The assembled map for one Y-piece.
#[derive(Debug)]
pub struct MapAssembly {
    pub hex: HexagonSolution,
    /// Angle `W` with `sin W = tanh w`, `cos W = 1/cosh w`.
    pub big_w: f64,
    pub k_eps: f64,
    table: OnceLock<CurveTable>,
}

impl Clone for MapAssembly {
    fn clone(&self) -> Self {
        Self {
            hex: self.hex.clone(),
            big_w: self.big_w,
            k_eps: self.k_eps,
            table: OnceLock::new(),
        }
    }
}

impl MapAssembly {
    pub fn new(params: &YPieceParams) -> Result<Self> {
        let hex = solve_hexagon(params)?;
        Ok(Self::from_hexagon(hex))
    }

    pub fn from_hexagon(hex: HexagonSolution) -> Self {
        let big_w = hex.w.tanh().asin();
        let k_eps = 2.0 * big_w / (std::f64::consts::PI - 2.0 * hex.eps);
        Self {
            hex,
            big_w,
            k_eps,
            table: OnceLock::new(),
        }
    }

    pub fn params(&self) -> YPieceParams {
        self.hex.params()
    }

    /// Height `2a` of the image of `β`.
    pub fn mid_height(&self) -> f64 {
        2.0 * self.hex.a
    }

    /// Height `2a/ε*` of the image of `α₃`.
    pub fn top_height(&self) -> f64 {
        2.0 * self.hex.a / self.hex.eps_star()
    }

    /// Lookup table of `f` and `b₁`, for drawing only.
    pub fn curve_table(&self) -> &CurveTable {
        self.table.get_or_init(|| CurveTable::build(self))
    }

    /// The smooth piece containing `z`.
    pub fn piece_of(&self, z: Complex64) -> Piece {
        match self.hex.region_of(z) {
            Region::Upper => Piece::Upper,
            region => {
                let t = lower::f_beta_branch(&self.hex, region, fermi_c(z).t);
                let y = uhp_c(FermiCoord::new(t, fermi_c(z).r)).im;
                Piece::Lower {
                    region,
                    stretched: y > self.hex.a,
                }
            }
        }
    }

    /// Evaluate the formula of `piece` at `z`, whether or not `z` lies in it.
    pub fn eval_piece(&self, piece: Piece, z: Complex64) -> Result<Complex64> {
        match piece {
            Piece::Upper => {
                let w = self.f_upper_c(z)?;
                let (x, y) = self.g_upper(w.re, w.im);
                Ok(Complex64::new(x, y))
            }
            Piece::Lower { region, stretched } => {
                let c = fermi_c(z);
                let w = uhp_c(FermiCoord::new(
                    lower::f_beta_branch(&self.hex, region, c.t),
                    c.r,
                ));
                if !stretched {
                    return Ok(w);
                }
                let f = self.f_unchecked(w.re)?;
                let y = self.g_beta_with(w.re, w.im, f)?;
                let x = self.h_beta_unchecked(w.re, y)?;
                Ok(Complex64::new(x, y))
            }
        }
    }

    /// Evaluate the inverse of the formula of `piece` at the target point `q`.
    pub fn eval_inverse_piece(&self, piece: Piece, q: Complex64) -> Result<Complex64> {
        match piece {
            Piece::Upper => {
                let (x, y) = self.g_upper_inverse(q.re, q.im);
                Ok(self.f_upper_inverse_c(Complex64::new(x, y)))
            }
            Piece::Lower { region, stretched } => {
                let mut w = q;
                if stretched {
                    let c = (q.im - self.hex.a) / self.hex.a;
                    let x = q.re + c * (self.b1_unchecked(q.re) - q.re);
                    let f = self.f_unchecked(x)?;
                    w = Complex64::new(x, self.g_beta_inverse_with(q.im, f));
                }
                let c = fermi_c(w);
                Ok(uhp_c(FermiCoord::new(
                    lower::f_beta_branch_inverse(&self.hex, region, c.t),
                    c.r,
                )))
            }
        }
    }

    pub(crate) fn phi_c(&self, z: Complex64) -> Result<Complex64> {
        self.eval_piece(self.piece_of(z), z)
    }

    pub(crate) fn phi_inverse_c(&self, q: Complex64) -> Result<Complex64> {
        let h = &self.hex;
        if q.im >= self.mid_height() {
            let (x, y) = self.g_upper_inverse(q.re, q.im);
            return Ok(self.f_upper_inverse_c(Complex64::new(x, y)));
        }
        let mut w = q;
        if q.im > h.a {
            let (x, y) = self.l_beta(q.re, q.im);
            let f = self.f_unchecked(x)?;
            w = Complex64::new(x, self.g_beta_inverse_with(y, f));
        }
        Ok(uhp_c(lower::f_beta_inverse(h, fermi_c(w))))
    }

    /// Signed margins of a target point to the sides `c', α'₁, α'₂, top,
    /// x = a₁, x = a₂`, positive inside.
    pub(crate) fn target_margins(&self, q: Complex64) -> [f64; 6] {
        let h = &self.hex;
        let f = fermi_c(q);
        [
            f.r,
            ((f.t + h.cp1).sinh() * f.r.cosh()).asinh(),
            ((h.cp2 - f.t).sinh() * f.r.cosh()).asinh(),
            (self.top_height() / q.im).ln(),
            ((q.re - h.a1) / q.im).asinh(),
            ((h.a2 - q.re) / q.im).asinh(),
        ]
    }

    pub fn target_contains(&self, q: HalfPlanePoint) -> bool {
        self.target_margins(q.to_complex())
            .iter()
            .all(|&m| m >= -crate::pants::MEMBERSHIP_TOL)
    }

    /// Whether `z` lies in the reduced Y-piece `Ŷ`: below `β` and outside the
    /// reduced collars of `γ₁` and `γ₂`.
    pub fn in_reduced_piece(&self, z: HalfPlanePoint) -> bool {
        let tol = crate::pants::MEMBERSHIP_TOL;
        let zc = z.to_complex();
        self.hex.contains(z)
            && self.hex.signed_dist_to_alpha3(zc) <= -self.hex.w + tol
            && (1..=2).all(|i| self.hex.dist_to_alpha(i, zc) >= self.reduced_width(i) - tol)
    }

    /// Width `log(2/l_i)` of the reduced collar of `γ_i`, zero when empty.
    pub fn reduced_width(&self, i: usize) -> f64 {
        let l = if i == 1 { self.hex.l1 } else { self.hex.l2 };
        reduced_collar(l).map(|c| c.width).unwrap_or(0.0)
    }

    fn canonical_sheet(sheet: Sheet, margins: &[f64; 6], shared: [usize; 3]) -> Sheet {
        if shared
            .iter()
            .any(|&k| margins[k].abs() <= crate::pants::MEMBERSHIP_TOL)
        {
            Sheet::Front
        } else {
            sheet
        }
    }
}

/// `φ` on the Y-piece.
pub fn phi(asm: &MapAssembly, p: SurfacePoint) -> Result<SurfacePoint> {
    let z = p.z.to_complex();
    let margins = asm.hex.side_margins(z);
    if margins.iter().any(|&m| m < -crate::pants::MEMBERSHIP_TOL) {
        return Err(Error::OutOfDomain {
            region: "the source hexagon",
            x: p.z.x(),
            y: p.z.y(),
        });
    }
    let w = asm.phi_c(z)?;
    // c, d1 and d2 are shared by both hexagons.
    let sheet = MapAssembly::canonical_sheet(p.sheet, &margins, [0, 4, 5]);
    Ok(SurfacePoint {
        sheet,
        z: HalfPlanePoint::from_complex(w)?,
    })
}

/// `φ⁻¹` on the truncated target hexagon.
pub fn phi_inverse(asm: &MapAssembly, q: SurfacePoint) -> Result<SurfacePoint> {
    let qc = q.z.to_complex();
    let margins = asm.target_margins(qc);
    if margins.iter().any(|&m| m < -crate::pants::MEMBERSHIP_TOL) {
        return Err(Error::OutOfDomain {
            region: "the target hexagon",
            x: q.z.x(),
            y: q.z.y(),
        });
    }
    let z = asm.phi_inverse_c(qc)?;
    let sheet = MapAssembly::canonical_sheet(q.sheet, &margins, [0, 4, 5]);
    Ok(SurfacePoint {
        sheet,
        z: HalfPlanePoint::from_complex(z)?,
    })
}

/// `φ_ε̄⁻¹ ∘ φ_ε` between the reduced Y-pieces `Ŷ_{l1,l2,ε} → Ŷ_{l1,l2,ε̄}`.
pub fn compose_reduced(
    asm_eps: &MapAssembly,
    asm_epsbar: &MapAssembly,
    p: SurfacePoint,
) -> Result<SurfacePoint> {
    let (a, b) = (asm_eps.params(), asm_epsbar.params());
    if a.l1 != b.l1 || a.l2 != b.l2 {
        return Err(Error::Invariant(format!(
            "compose_reduced needs equal l1, l2 (got {a:?} and {b:?})"
        )));
    }
    if !asm_eps.in_reduced_piece(p.z) {
        return Err(Error::OutOfDomain {
            region: "the reduced Y-piece",
            x: p.z.x(),
            y: p.z.y(),
        });
    }
    phi_inverse(asm_epsbar, phi(asm_eps, p)?)
}

/// `s(t) = (π t/2) / sin(π t/2)`, with `s(0) = 1`.
pub fn sinc_ratio(t: f64) -> f64 {
    let u = 0.5 * std::f64::consts::PI * t;
    if u == 0.0 {
        1.0
    } else {
        u / u.sin()
    }
}

/// `δ = ε̄ sec(arccos(ε̄/(1 + ε̄²/4)) − (ε̄/ε) arccos(ε/(1 + ε²/4)))`.
pub fn delta_cor4(eps: f64, epsbar: f64) -> Result<f64> {
    if !(eps > 0.0 && eps <= 0.5) {
        return Err(Error::Domain {
            name: "eps",
            value: eps,
            range: "(0, 0.5]",
        });
    }
    if !(epsbar > 0.0 && epsbar <= eps) {
        return Err(Error::Domain {
            name: "epsbar",
            value: epsbar,
            range: "(0, eps]",
        });
    }
    let angle = |e: f64| (e / (1.0 + 0.25 * e * e)).acos();
    let inner = angle(epsbar) - (epsbar / eps) * angle(eps);
    Ok(epsbar / inner.cos())
}
