use pantsqc_core::hyp::{gamma_point, uhp_from_fermi};
use pantsqc_core::qcmap::{compose_reduced, phi, phi_inverse};
use pantsqc_core::verify::{self, VerifyConfig};
use pantsqc_core::{
    classify_region, Error, FermiCoord, HalfPlanePoint, MapAssembly, Region, Sheet, SurfacePoint,
    YPieceParams,
};

fn assembly(l1: f64, l2: f64, eps: f64) -> MapAssembly {
    MapAssembly::new(&YPieceParams::new(l1, l2, eps).unwrap()).unwrap()
}

#[test]
fn parameter_validation() {
    assert!(matches!(
        YPieceParams::new(1.0, 1.0, 0.6),
        Err(Error::Domain { name: "eps", .. })
    ));
    assert!(matches!(
        YPieceParams::new(1.0, 1.0, 0.0),
        Err(Error::Domain { .. })
    ));
    assert!(matches!(
        YPieceParams::new(0.0, 1.0, 0.1),
        Err(Error::Unsupported { index: 1 })
    ));
    assert!(matches!(
        YPieceParams::new(1.0, -2.0, 0.1),
        Err(Error::Domain { name: "l2", .. })
    ));
    let msg = YPieceParams::new(1.0, 1.0, 0.6).unwrap_err().to_string();
    assert!(msg.contains("eps out of range (0, 0.5]"), "{msg}");
}

#[test]
fn fixed_point_and_top_side() {
    let asm = assembly(1.0, 1.0, 0.5);
    let img = phi(&asm, SurfacePoint::front(HalfPlanePoint::I)).unwrap();
    assert!((img.z.to_complex() - HalfPlanePoint::I.to_complex()).norm() < 1e-12);
    assert_eq!(img.sheet, Sheet::Front);

    let e0 = uhp_from_fermi(FermiCoord::new(0.0, asm.hex.lambda)).unwrap();
    let top = phi(&asm, SurfacePoint::front(e0)).unwrap();
    assert!((top.z.y() / asm.top_height() - 1.0).abs() < 1e-12);
    let half_pi = std::f64::consts::FRAC_PI_2;
    assert!((asm.top_height() - 2.0 * asm.hex.a * half_pi / asm.hex.eps).abs() < 1e-9);
}

#[test]
fn regions_are_classified() {
    let asm = assembly(1.0, 2.0, 0.25);
    let h = &asm.hex;
    let low = |t: f64| uhp_from_fermi(FermiCoord::new(t, 0.3)).unwrap();
    assert_eq!(
        classify_region(h, low(-h.eta1 - 0.2)).unwrap(),
        Region::OuterLeft
    );
    assert_eq!(
        classify_region(h, low(-0.5 * h.eta1)).unwrap(),
        Region::InnerLeft
    );
    assert_eq!(
        classify_region(h, low(0.5 * h.eta2)).unwrap(),
        Region::InnerRight
    );
    assert_eq!(
        classify_region(h, low(h.eta2 + 0.2)).unwrap(),
        Region::OuterRight
    );
    let near_top = uhp_from_fermi(FermiCoord::new(0.0, h.lambda - 0.01)).unwrap();
    assert_eq!(classify_region(h, near_top).unwrap(), Region::Upper);
    let outside = HalfPlanePoint::new(0.0, 0.5).unwrap();
    assert!(classify_region(h, outside).is_err());
}

#[test]
fn side_c_is_shifted_along_gamma() {
    let asm = assembly(1.0, 1.0, 0.5);
    let h = &asm.hex;
    let t = -h.eta1 - 0.3;
    let img = phi(
        &asm,
        SurfacePoint {
            sheet: Sheet::Back,
            z: gamma_point(t),
        },
    )
    .unwrap();
    let want = gamma_point(t + h.delta1);
    assert!(img.z.dist(&want) < 1e-10);
    // c is shared by both hexagons, so the sheet is canonical.
    assert_eq!(img.sheet, Sheet::Front);
}

#[test]
fn out_of_domain_points_are_rejected() {
    let asm = assembly(1.0, 1.0, 0.25);
    let below = HalfPlanePoint::new(0.0, 0.2).unwrap();
    assert!(matches!(
        phi(&asm, SurfacePoint::front(below)),
        Err(Error::OutOfDomain { .. })
    ));
    let high = HalfPlanePoint::new(0.0, 2.0 * asm.top_height()).unwrap();
    assert!(matches!(
        phi_inverse(&asm, SurfacePoint::front(high)),
        Err(Error::OutOfDomain { .. })
    ));
}

#[test]
fn back_sheet_is_carried_through() {
    let asm = assembly(3.0, 1.0, 0.1);
    let z = uhp_from_fermi(FermiCoord::new(0.1, 1.0)).unwrap();
    let img = phi(
        &asm,
        SurfacePoint {
            sheet: Sheet::Back,
            z,
        },
    )
    .unwrap();
    assert_eq!(img.sheet, Sheet::Back);
    let back = phi_inverse(&asm, img).unwrap();
    assert_eq!(back.sheet, Sheet::Back);
    assert!(back.z.dist(&z) < 1e-9);
}

#[test]
fn compose_requires_matching_lengths() {
    let a = assembly(1.0, 1.0, 0.5);
    let b = assembly(1.0, 2.0, 0.25);
    let p = SurfacePoint::front(HalfPlanePoint::I);
    assert!(compose_reduced(&a, &b, p).is_err());
    let c = assembly(1.0, 1.0, 0.25);
    let q = compose_reduced(&a, &c, p).unwrap();
    assert!(q.z.dist(&HalfPlanePoint::I) < 1e-12);
}

#[test]
fn reports_are_deterministic() {
    let asm = assembly(1.0, 1.0, 0.25);
    let cfg = VerifyConfig {
        dilatation_points: 500,
        distortion_points: 400,
        ..VerifyConfig::default()
    };
    let a = serde_json::to_string(&verify::run_suite(&asm, &cfg).unwrap()).unwrap();
    let b = serde_json::to_string(&verify::run_suite(&asm, &cfg).unwrap()).unwrap();
    assert_eq!(a, b);
    let other = VerifyConfig {
        seed: 7,
        ..cfg.clone()
    };
    let r1 = verify::check_roundtrip(&asm, &cfg).unwrap();
    let r2 = verify::check_roundtrip(&asm, &other).unwrap();
    assert!(r1.pass && r2.pass);
    assert_ne!(r1.items[0].measured, r2.items[0].measured);
}

#[test]
fn report_json_carries_the_contract_fields() {
    let asm = assembly(1.0, 1.0, 0.25);
    let r = verify::check_curve_bounds(&asm, &VerifyConfig::default()).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    for key in [
        "claim",
        "params",
        "bound",
        "measured",
        "slack",
        "pass",
        "n_samples",
        "seed",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["params"]["l1"], 1.0);
    assert!(v["params"].get("epsbar").is_none());
}

#[test]
fn corrupted_bound_fails() {
    let asm = assembly(1.0, 1.0, 0.25);
    let cfg = VerifyConfig {
        dilatation_points: 200,
        corrupt_bound: true,
        ..VerifyConfig::default()
    };
    let r = verify::check_dilatation(&asm, &cfg).unwrap();
    assert!(!r.pass);
    assert_eq!(r.bound, 1.0);
}
