//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach stdout; exits non-zero if any fails.

use std::process::Command;

use quatspin_core::dirac::{self, ComplexMultivector, DiracIdempotent, DiracSpinor4};
use quatspin_core::figures::{self, FigureKind};
use quatspin_core::ga::{Multivector, Signature};
use quatspin_core::quat_rep::{self, QuatMatrix2};
use quatspin_core::{gspinor, iso, qspinor, sample, stereo, AlgebraTag, GSpinor, PlanePoint};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Check {
    label: &'static str,
    value: f64,
    tol: f64,
    /// `true`: value must be ≤ tol; `false`: value must be ≥ tol.
    upper: bool,
}

impl Check {
    fn at_most(label: &'static str, value: f64, tol: f64) -> Self {
        Check { label, value, tol, upper: true }
    }

    fn at_least(label: &'static str, value: f64, bound: f64) -> Self {
        Check { label, value, tol: bound, upper: false }
    }

    fn ok(&self) -> bool {
        if self.value.is_nan() {
            return false;
        }
        if self.upper {
            self.value <= self.tol
        } else {
            self.value >= self.tol
        }
    }

    fn describe(&self) -> String {
        let op = if self.upper { "<=" } else { ">=" };
        format!("{}={:.3e}{op}{:.0e}", self.label, self.value, self.tol)
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn max(it: impl IntoIterator<Item = f64>) -> f64 {
    it.into_iter().fold(0.0, |m, v| if v.is_nan() { f64::INFINITY } else { m.max(v) })
}

fn representation_homomorphism() -> Vec<Check> {
    let g4 = Signature::euclidean4();
    let mut r = rng(101);
    let (mut re, mut ri) = (0.0f64, 0.0f64);
    for _ in 0..1000 {
        let (a, b) = (sample::multivector(&mut r, &g4), sample::multivector(&mut r, &g4));
        let ab = &a * &b;
        let e = quat_rep::rep_e(&a).unwrap().matmul(&quat_rep::rep_e(&b).unwrap());
        re = re.max(quat_rep::rep_e(&ab).unwrap().max_abs_diff(&e));
        let i = quat_rep::rep_I(&a).unwrap().matmul(&quat_rep::rep_I(&b).unwrap());
        ri = ri.max(quat_rep::rep_I(&ab).unwrap().max_abs_diff(&i));
    }
    let faithful = max((0..16).map(|m| {
        let b = Multivector::blade(&g4, m);
        let e = quat_rep::unrep_e(&quat_rep::rep_e(&b).unwrap()).max_abs_diff(&b);
        let i = quat_rep::unrep_I(&quat_rep::rep_I(&b).unwrap()).max_abs_diff(&b);
        e.max(i)
    }));
    vec![
        Check::at_most("rep_e", re, 1e-12),
        Check::at_most("rep_I", ri, 1e-12),
        Check::at_most("unrep_blades", faithful, 0.0),
    ]
}

fn change_of_basis() -> Vec<Check> {
    let g4 = Signature::euclidean4();
    let mut r = rng(102);
    let cb = max((0..1000).map(|_| {
        let g = sample::multivector(&mut r, &g4);
        quat_rep::change_basis(&quat_rep::rep_I(&g).unwrap()).max_abs_diff(&quat_rep::rep_e(&g).unwrap())
    }));
    let a = quat_rep::a_matrix();
    let ids = quat_rep::idempotent_identities();
    vec![
        Check::at_most("change_basis", cb, 1e-12),
        Check::at_most("A_A*", a.matmul(&a.star()).max_abs_diff(&QuatMatrix2::identity()), 1e-15),
        Check::at_most("factorization", ids.max_residual(), 1e-12),
        Check::at_least("B_B*_deviation", ids.b_b_star_deviation, 0.5),
    ]
}

fn isomorphism() -> Vec<Check> {
    let (g4, sta) = (Signature::euclidean4(), Signature::spacetime());
    let mut r = rng(103);
    let (mut fwd, mut bwd, mut inv) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..1000 {
        let (a, b) = (sample::multivector(&mut r, &g4), sample::multivector(&mut r, &g4));
        let img = |m: &Multivector| iso::g4_to_sta(m).unwrap();
        fwd = fwd.max(img(&(&a * &b)).max_abs_diff(&(&img(&a) * &img(&b))));
        let (c, d) = (sample::multivector(&mut r, &sta), sample::multivector(&mut r, &sta));
        let pre = |m: &Multivector| iso::sta_to_g4(m).unwrap();
        bwd = bwd.max(pre(&(&c * &d)).max_abs_diff(&(&pre(&c) * &pre(&d))));
        inv = inv.max(pre(&img(&a)).max_abs_diff(&a)).max(img(&pre(&c)).max_abs_diff(&c));
    }
    vec![
        Check::at_most("g4_to_sta_product", fwd, 1e-12),
        Check::at_most("sta_to_g4_product", bwd, 1e-12),
        Check::at_most("mutual_inverse", inv, 1e-12),
    ]
}

fn projections() -> Vec<Check> {
    let (g4, sta) = (Signature::euclidean4(), Signature::spacetime());
    let e0 = Multivector::generator(&g4, 0);
    let g0 = Multivector::generator(&sta, 0);
    let mut r = rng(104);
    let (mut rs, mut rh, mut sand_s, mut sand_h, mut trig, mut hyp) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for _ in 0..500 {
        let x = sample::plane_point(&mut r, 3.0);
        rs = rs.max(stereo::project_sphere(&stereo::lift_sphere(&x)).unwrap().max_abs_diff(&x));
        let rot = stereo::sphere_rotor(&x);
        sand_s = sand_s.max((&(&rot.rotor * &e0) * &rot.rotor.reverse()).max_abs_diff(stereo::lift_sphere(&x).a_hat()));
        trig = trig.max((rot.cos_theta.powi(2) + rot.sin_theta.powi(2) - 1.0).abs());

        let y = sample::plane_point(&mut r, 0.9);
        let lifted = stereo::lift_hyper(&y).unwrap();
        rh = rh.max(stereo::project_hyper(&lifted).max_abs_diff(&y));
        let b = stereo::hyper_boost(&y).unwrap();
        sand_h = sand_h.max((&(&b.rotor * &g0) * &b.rotor.reverse()).max_abs_diff(lifted.a_hat()));
        hyp = hyp.max((b.cosh_phi.powi(2) - b.sinh_phi.powi(2) - 1.0).abs());
    }
    let half = stereo::hyper_boost(&PlanePoint::new([0.5, 0.0, 0.0])).unwrap();
    let half_err = (half.cosh_phi - 5.0 / 3.0).abs().max((half.sinh_phi - 4.0 / 3.0).abs());
    vec![
        Check::at_most("sphere_round_trip", rs, 1e-10),
        Check::at_most("hyper_round_trip", rh, 1e-10),
        Check::at_most("rotor_sandwich", sand_s, 1e-10),
        Check::at_most("boost_sandwich", sand_h, 1e-10),
        Check::at_most("cos2+sin2", trig, 1e-12),
        Check::at_most("cosh2-sinh2", hyp, 1e-12),
        Check::at_most("half_case", half_err, 1e-12),
    ]
}

fn metric_formulas() -> Vec<Check> {
    let h = 1e-5;
    let mut r = rng(105);
    let fd = |lift: &dyn Fn(&PlanePoint) -> [f64; 4], x: &PlanePoint, dx: &[f64; 3]| {
        let at = |s: f64| PlanePoint::new([x.x[0] + s * dx[0], x.x[1] + s * dx[1], x.x[2] + s * dx[2]]);
        let (p, m) = (lift(&at(h)), lift(&at(-h)));
        [0, 1, 2, 3].map(|k| (p[k] - m[k]) / (2.0 * h))
    };
    let (mut es, mut eh, mut flip) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..200 {
        let x = sample::plane_point(&mut r, 3.0);
        let dx = sample::vector3(&mut r);
        let le = stereo::sphere_metric(&x, &dx);
        let d = fd(&|p| stereo::lift_sphere(p).components(), &x, &dx);
        let d2: f64 = d.iter().map(|c| c * c).sum();
        es = es.max(((d2 - le.ds2) / le.ds2).abs());

        let y = sample::plane_point(&mut r, 0.9);
        let dy = sample::vector3(&mut r);
        let le = stereo::hyper_metric(&y, &dy).unwrap();
        let d = fd(&|p| stereo::lift_hyper(p).unwrap().components(), &y, &dy);
        let d2 = d[0] * d[0] - d[1] * d[1] - d[2] * d[2] - d[3] * d[3];
        eh = eh.max(((d2 - le.ds2) / le.ds2).abs());
        let dy2: f64 = dy.iter().map(|c| c * c).sum();
        let expected = -4.0 * dy2 / (1.0 - y.norm_sq()).powi(2);
        flip = flip.max(((le.ds2 - expected) / expected).abs());
    }
    vec![
        Check::at_most("sphere_fd_rel", es, 1e-6),
        Check::at_most("hyper_fd_rel", eh, 1e-6),
        Check::at_most("hyper_sign_flip_rel", flip, 1e-12),
    ]
}

fn fidelity_triple() -> Vec<Check> {
    let mut r = rng(106);
    let mut checks = Vec::new();
    for (tag, spread_label) in [(AlgebraTag::Pauli3, "G3_spread"), (AlgebraTag::Minkowski12, "G12_spread")] {
        let (mut spread, mut lo, mut hi) = (0.0f64, f64::INFINITY, f64::NEG_INFINITY);
        for _ in 0..500 {
            let (a, b) = (sample::gspinor(&mut r, tag), sample::gspinor(&mut r, tag));
            let routes = gspinor::fidelity_routes(&a, &b).unwrap();
            spread = spread.max(routes.spread());
            lo = lo.min(routes.chain);
            hi = hi.max(routes.chain);
        }
        checks.push(Check::at_most(spread_label, spread, 1e-10));
        if tag == AlgebraTag::Pauli3 {
            checks.push(Check::at_least("G3_min", lo, 0.0));
            checks.push(Check::at_most("G3_max", hi, 1.0));
        } else {
            checks.push(Check::at_least("G12_min", lo, 1.0));
        }
    }
    let antipode = max((0..500).map(|_| {
        let mut x = sample::plane_point(&mut r, 3.0);
        x.x[2] = 0.0;
        if x.norm_sq() < 1e-6 {
            x.x[0] = 1.0;
        }
        let xb = gspinor::antipodal_state(&x).unwrap();
        let a = GSpinor::from_plane(AlgebraTag::Pauli3, [x.x[0], x.x[1]]).unwrap();
        let b = GSpinor::from_plane(AlgebraTag::Pauli3, [xb.x[0], xb.x[1]]).unwrap();
        gspinor::fidelity(&a, &b).unwrap().abs()
    }));
    checks.push(Check::at_most("antipode", antipode, 1e-12));
    checks
}

fn quaternion_canonical() -> Vec<Check> {
    let tag = AlgebraTag::Spacetime13;
    let vp = qspinor::v_plus(tag).unwrap();
    let mut r = rng(107);
    let (mut recon, mut msq, mut orth, mut proj, mut dual) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for _ in 0..500 {
        let psi = sample::qspinor(&mut r, tag);
        let c = psi.canonical_q().unwrap();
        let phase = iso::g4_to_sta(&c.phase.to_multivector()).unwrap();
        let rebuilt = (&(&phase * &c.m_hat) * &vp).scale(c.rho);
        recon = recon.max(rebuilt.max_abs_diff(&psi.to_multivector()));
        let expected = 1.0 - psi.q1.norm_sq() / psi.q0.norm_sq();
        msq = msq.max((&c.m * &c.m).max_abs_diff(&Multivector::scalar(&Signature::spacetime(), expected)));

        let o = sample::orthogonal_qspinor(&mut r, tag);
        let co = o.canonical_orthogonal().unwrap();
        let g4 = Signature::euclidean4();
        let xm = Multivector::vector(&g4, &[0.0, co.x_m[0], co.x_m[1], co.x_m[2]]);
        let m = iso::g4_to_sta(&(&(&Multivector::one(&g4) + &xm) * &Multivector::generator(&g4, 0))).unwrap();
        orth = orth.max(m.max_abs_diff(&co.canonical.m));
        proj = proj.max(o.projector_closed_form().unwrap().max_abs_diff(&o.projector()));

        let other = sample::qspinor(&mut r, tag);
        let routes = qspinor::fidelity_q_routes(&psi, &other).unwrap();
        dual = dual.max((routes.chain - routes.circ_form).abs());
    }
    vec![
        Check::at_most("reconstruction", recon, 1e-12),
        Check::at_most("M_squared", msq, 1e-12),
        Check::at_most("orthogonal_form", orth, 1e-12),
        Check::at_most("projector", proj, 1e-12),
        Check::at_most("dual_route", dual, 1e-10),
    ]
}

fn dirac_bridge() -> Vec<Check> {
    let mut r = rng(108);
    let round = max((0..1000).map(|_| {
        let phi = sample::dirac(&mut r);
        let m = dirac::dirac_to_geometric(&phi);
        match dirac::geometric_to_qspinor(&m) {
            Ok(psi) => dirac::qspinor_to_dirac(&psi).max_abs_diff(&phi),
            Err(_) => f64::INFINITY,
        }
    }));
    let sta = Signature::spacetime();
    let g21 = ComplexMultivector::real(&Multivector::generator(&sta, 2) * &Multivector::generator(&sta, 1));
    let j_action = max((0..8).map(|k| {
        let mut v = [0.0; 8];
        v[k] = 1.0;
        let phi = DiracSpinor4::from_reals(&v).unwrap();
        dirac::dirac_to_geometric(&phi.times_j()).max_abs_diff(&(&dirac::dirac_to_geometric(&phi) * &g21))
    }));
    let u = DiracIdempotent::all().map(DiracIdempotent::element);
    let mut spectral = 0.0f64;
    let mut sum = ComplexMultivector::zero();
    for (a, ua) in u.iter().enumerate() {
        sum = &sum + ua;
        for (b, ub) in u.iter().enumerate() {
            let target = if a == b { ua.clone() } else { ComplexMultivector::zero() };
            spectral = spectral.max((ua * ub).max_abs_diff(&target));
        }
    }
    let complete = sum.max_abs_diff(&ComplexMultivector::real(Multivector::one(&sta)));
    vec![
        Check::at_most("round_trip", round, 1e-12),
        Check::at_most("j_action", j_action, 0.0),
        Check::at_most("orthogonal", spectral, 0.0),
        Check::at_most("complete", complete, 0.0),
    ]
}

fn parse_float_cells(csv: &str) -> Vec<Vec<Option<f64>>> {
    csv.lines()
        .skip(1)
        .map(|l| l.split(',').map(|c| if c.is_empty() { None } else { c.parse().ok() }).collect())
        .collect()
}

fn cli_determinism() -> Vec<Check> {
    let bin = env!("CARGO_BIN_EXE_quatspin");
    let run = || Command::new(bin).args(["verify", "--seed", "7", "--cases", "500"]).output().unwrap();
    let (first, second) = (run(), run());
    let exit_ok = first.status.code() == Some(0) && second.status.code() == Some(0);
    let identical = first.stdout == second.stdout && !first.stdout.is_empty();
    let groups = String::from_utf8_lossy(&first.stdout)
        .lines()
        .filter(|l| l.starts_with("suite="))
        .count();

    let dir = std::env::temp_dir().join(format!("quatspin-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut unit = 0.0f64;
    for kind in FigureKind::ALL {
        let path = dir.join(format!("{kind}.csv"));
        let status = Command::new(bin)
            .args(["figure", kind.name(), "--samples", "201", "--out"])
            .arg(&path)
            .output()
            .unwrap()
            .status;
        if !status.success() {
            unit = f64::INFINITY;
            continue;
        }
        let text = std::fs::read_to_string(&path).unwrap();
        let metric = if kind == FigureKind::StereoSphere { 1.0 } else { -1.0 };
        for row in parse_float_cells(&text) {
            if let (Some(a0), Some(a1), Some(a2), Some(a3)) = (row[4], row[5], row[6], row[7]) {
                let sq = a0 * a0 + metric * (a1 * a1 + a2 * a2 + a3 * a3);
                unit = unit.max((sq - 1.0).abs());
            }
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    vec![
        Check::at_least("exit_zero", f64::from(u8::from(exit_ok)), 1.0),
        Check::at_least("byte_identical", f64::from(u8::from(identical)), 1.0),
        Check::at_least("groups", groups as f64, 12.0),
        Check::at_most("figure_unit", unit, figures::ROW_CHECK_TOL),
    ]
}

fn main() {
    let criteria: [(&str, fn() -> Vec<Check>); 9] = [
        ("representation homomorphism", representation_homomorphism),
        ("change of basis", change_of_basis),
        ("isomorphism", isomorphism),
        ("projection round trips and rotors", projections),
        ("metric formulas", metric_formulas),
        ("spinor fidelity triple equality", fidelity_triple),
        ("quaternion-spinor canonical form", quaternion_canonical),
        ("dirac bridge", dirac_bridge),
        ("cli determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let checks = run();
        let pass = checks.iter().all(Check::ok);
        let detail: Vec<String> = checks.iter().map(Check::describe).collect();
        println!(
            "criterion {} [{}] {}: {}",
            n + 1,
            if pass { "PASS" } else { "FAIL" },
            name,
            detail.join(" ")
        );
        if !pass {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
