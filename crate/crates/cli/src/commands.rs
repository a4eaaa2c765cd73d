use std::fs::File;
use std::io::{self, Read};
use std::path::Path;

use pantsqc_core::hyp::uhp_from_fermi;
use pantsqc_core::qcmap::{phi, phi_inverse};
use pantsqc_core::verify::{self, VerificationReport, VerifyConfig};
use pantsqc_core::{
    classify_region, solve_hexagon, FermiCoord, HalfPlanePoint, MapAssembly, Sheet, SurfacePoint,
    YPieceParams,
};
use serde::Serialize;

use crate::{emit, CheckArgs, Failure};

pub const GRID_LENGTHS: [f64; 4] = [0.3, 1.0, 3.0, 6.0];
pub const GRID_EPSILONS: [f64; 4] = [0.05, 0.1, 0.25, 0.5];

fn assembly(p: &YPieceParams) -> Result<MapAssembly, Failure> {
    MapAssembly::new(p).map_err(Failure::usage)
}

fn to_json<T: Serialize>(value: &T) -> Result<Vec<u8>, Failure> {
    let mut out = serde_json::to_vec_pretty(value).map_err(|e| Failure::Io(e.to_string()))?;
    out.push(b'\n');
    Ok(out)
}

pub fn solve(p: &YPieceParams, output: Option<&Path>) -> Result<(), Failure> {
    let hex = solve_hexagon(p).map_err(Failure::usage)?;
    emit(output, &to_json(&hex)?)
}

#[derive(Clone, Copy)]
enum Chart {
    Fermi,
    HalfPlane,
}

#[derive(Serialize)]
struct MapRow<'a> {
    sheet: &'a str,
    x: Option<f64>,
    y: Option<f64>,
    region: &'a str,
    error: String,
}

fn open_input(input: Option<&Path>) -> Result<Box<dyn Read>, Failure> {
    Ok(match input {
        Some(p) => {
            Box::new(File::open(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?)
        }
        None => Box::new(io::stdin()),
    })
}

/// Evaluates one row; the error string is the per-row error column.
fn map_point(
    asm: &MapAssembly,
    sheet: Sheet,
    z: pantsqc_core::Result<HalfPlanePoint>,
    inverse: bool,
) -> Result<(SurfacePoint, &'static str), String> {
    let z = z.map_err(|e| e.to_string())?;
    let p = SurfacePoint { sheet, z };
    let (image, source) = if inverse {
        let pre = phi_inverse(asm, p).map_err(|e| e.to_string())?;
        (pre, pre.z)
    } else {
        (phi(asm, p).map_err(|e| e.to_string())?, z)
    };
    let region = classify_region(&asm.hex, source).map_err(|e| e.to_string())?;
    Ok((image, region.as_str()))
}

pub fn map(
    p: &YPieceParams,
    input: Option<&Path>,
    output: Option<&Path>,
    inverse: bool,
) -> Result<(), Failure> {
    let asm = assembly(p)?;
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(open_input(input)?);
    let malformed = |e: csv::Error| match e.kind() {
        csv::ErrorKind::Io(_) => Failure::Io(e.to_string()),
        _ => Failure::Usage(format!("malformed CSV: {e}")),
    };
    let headers = reader.headers().map_err(malformed)?;
    let chart = match headers.iter().collect::<Vec<_>>().as_slice() {
        ["sheet", "t", "r"] => Chart::Fermi,
        ["sheet", "x", "y"] => Chart::HalfPlane,
        other => {
            return Err(Failure::Usage(format!(
                "malformed CSV: expected header sheet,t,r or sheet,x,y, got {}",
                other.join(",")
            )))
        }
    };
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut rows = 0;
    for (k, record) in reader.records().enumerate() {
        let record = record.map_err(malformed)?;
        let line = k + 2;
        let sheet: Sheet = record[0]
            .parse()
            .map_err(|e| Failure::Usage(format!("malformed CSV at line {line}: {e}")))?;
        let num = |j: usize| {
            record[j].parse::<f64>().map_err(|e| {
                Failure::Usage(format!(
                    "malformed CSV at line {line}: {:?}: {e}",
                    &record[j]
                ))
            })
        };
        let (u, v) = (num(1)?, num(2)?);
        let z = match chart {
            Chart::Fermi => uhp_from_fermi(FermiCoord::new(u, v)),
            Chart::HalfPlane => HalfPlanePoint::new(u, v),
        };
        let row = match map_point(&asm, sheet, z, inverse) {
            Ok((img, region)) => MapRow {
                sheet: img.sheet.as_str(),
                x: Some(img.z.x()),
                y: Some(img.z.y()),
                region,
                error: String::new(),
            },
            Err(error) => MapRow {
                sheet: sheet.as_str(),
                x: None,
                y: None,
                region: "",
                error,
            },
        };
        writer
            .serialize(row)
            .map_err(|e| Failure::Io(e.to_string()))?;
        rows += 1;
    }
    if rows == 0 {
        writer
            .write_record(["sheet", "x", "y", "region", "error"])
            .map_err(|e| Failure::Io(e.to_string()))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Failure::Io(e.to_string()))?;
    emit(output, &bytes)
}

#[derive(Serialize)]
struct SuiteReport<'a> {
    pass: bool,
    seed: u64,
    grid: &'a str,
    tuples: &'a [YPieceParams],
    n_reports: usize,
    n_failed: usize,
    reports: Vec<VerificationReport>,
}

fn tuples(args: &CheckArgs) -> Result<Vec<YPieceParams>, Failure> {
    if args.grid.is_some() {
        let mut out = Vec::new();
        for l1 in GRID_LENGTHS {
            for l2 in GRID_LENGTHS {
                for eps in GRID_EPSILONS {
                    out.push(YPieceParams::new(l1, l2, eps).map_err(Failure::usage)?);
                }
            }
        }
        return Ok(out);
    }
    match (args.l1, args.l2, args.eps) {
        (Some(l1), Some(l2), Some(eps)) => {
            Ok(vec![YPieceParams::new(l1, l2, eps).map_err(Failure::usage)?])
        }
        _ => Err(Failure::Usage(
            "check needs --l1, --l2 and --eps, or --grid".into(),
        )),
    }
}

pub fn check(args: &CheckArgs, seed: u64) -> Result<(), Failure> {
    let tuples = tuples(args)?;
    let epsbar_asm = |p: &YPieceParams, eb: f64| {
        YPieceParams::new(p.l1, p.l2, eb)
            .and_then(|q| MapAssembly::new(&q))
            .map_err(|e| Failure::Usage(format!("epsbar: {e}")))
    };
    let cfg = VerifyConfig {
        seed,
        dilatation_points: args.points,
        corrupt_bound: args.corrupt_bound,
        ..VerifyConfig::default()
    };
    let numeric = |e: pantsqc_core::Error| Failure::Verification(e.to_string());
    let mut reports = Vec::new();
    for p in &tuples {
        let asm = assembly(p)?;
        reports.extend(verify::run_suite(&asm, &cfg).map_err(numeric)?);
        if let Some(eb) = args.epsbar {
            let other = epsbar_asm(p, eb)?;
            reports.push(verify::check_composition(&asm, &other, &cfg).map_err(numeric)?);
        }
    }
    reports.push(verify::check_collar_delta(10, seed).map_err(numeric)?);
    for r in &reports {
        eprintln!("{}", r.summary());
    }
    let n_failed = reports.iter().filter(|r| !r.pass).count();
    let suite = SuiteReport {
        pass: n_failed == 0,
        seed,
        grid: if args.grid.is_some() {
            "default"
        } else {
            "single"
        },
        tuples: &tuples,
        n_reports: reports.len(),
        n_failed,
        reports,
    };
    emit(args.output.as_deref(), &to_json(&suite)?)?;
    if n_failed > 0 {
        return Err(Failure::Verification(format!("{n_failed} claim(s) failed")));
    }
    Ok(())
}
