//! Seeded invariant suites, one per module, with a line-oriented report.
//!
//! Each suite draws from its own ChaCha stream derived from the run seed, so
//! suites can run on separate threads and still produce identical output.

use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dirac::{self, DiracIdempotent};
use crate::ga::{self, Multivector, Signature};
use crate::gspinor::{self, GSpinor};
use crate::iso::{self, AlgebraTag};
use crate::qspinor::{self, QSpinor};
use crate::quat_rep::{self, QuatMatrix2};
use crate::quaternion::{quat_mul, Quaternion};
use crate::sample;
use crate::stereo::{self, PlanePoint};

/// Outcome of one property over all its cases.
#[derive(Clone, Debug, PartialEq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub cases: usize,
    pub max_residual: f64,
    pub tolerance: f64,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.max_residual <= self.tolerance
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub properties: Vec<PropertyResult>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunReport {
    pub seed: u64,
    pub cases: usize,
    pub tol_override: Option<f64>,
    pub suites: Vec<SuiteReport>,
}

impl RunReport {
    pub fn properties(&self) -> impl Iterator<Item = (&'static str, &PropertyResult)> {
        self.suites
            .iter()
            .flat_map(|s| s.properties.iter().map(move |p| (s.suite, p)))
    }

    pub fn group_count(&self) -> usize {
        self.properties().count()
    }

    pub fn failures(&self) -> usize {
        self.properties().filter(|(_, p)| !p.passed()).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    /// `key=value` lines, one per property, sorted by suite.
    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "report=verify").unwrap();
        writeln!(out, "seed={}", self.seed).unwrap();
        writeln!(out, "cases={}", self.cases).unwrap();
        match self.tol_override {
            Some(t) => writeln!(out, "tol={t:e}").unwrap(),
            None => writeln!(out, "tol=declared").unwrap(),
        }
        for (suite, p) in self.properties() {
            writeln!(
                out,
                "suite={suite} property={} cases={} max_residual={:.3e} tol={:.1e} status={}",
                p.name,
                p.cases,
                p.max_residual,
                p.tolerance,
                if p.passed() { "pass" } else { "fail" }
            )
            .unwrap();
        }
        writeln!(out, "groups={}", self.group_count()).unwrap();
        writeln!(out, "failures={}", self.failures()).unwrap();
        writeln!(out, "status={}", if self.passed() { "pass" } else { "fail" }).unwrap();
        out
    }
}

struct Suite {
    name: &'static str,
    rng: ChaCha8Rng,
    cases: usize,
    tol_override: Option<f64>,
    properties: Vec<PropertyResult>,
}

impl Suite {
    fn new(name: &'static str, index: u64, seed: u64, cases: usize, tol_override: Option<f64>) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        Suite {
            name,
            rng,
            cases,
            tol_override,
            properties: Vec::new(),
        }
    }

    /// Runs `f` once per case; each call returns a residual.
    fn check(&mut self, name: &'static str, tol: f64, mut f: impl FnMut(&mut ChaCha8Rng) -> f64) {
        let mut worst = 0.0f64;
        for _ in 0..self.cases {
            let r = f(&mut self.rng);
            // NaN must never pass
            worst = if r.is_nan() { f64::INFINITY } else { worst.max(r) };
        }
        self.record(name, self.cases, worst, tol);
    }

    /// Deterministic property evaluated once.
    fn once(&mut self, name: &'static str, tol: f64, residual: f64) {
        let r = if residual.is_nan() { f64::INFINITY } else { residual };
        self.record(name, 1, r, tol);
    }

    fn record(&mut self, name: &'static str, cases: usize, max_residual: f64, tol: f64) {
        self.properties.push(PropertyResult {
            name,
            cases,
            max_residual,
            tolerance: self.tol_override.unwrap_or(tol),
        });
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.name,
            properties: self.properties,
        }
    }
}

fn residual_or_inf<T>(r: crate::Result<T>, f: impl FnOnce(T) -> f64) -> f64 {
    r.map(f).unwrap_or(f64::INFINITY)
}

fn standard_signatures() -> [Signature; 4] {
    [
        Signature::euclidean4(),
        Signature::spacetime(),
        Signature::pauli3(),
        Signature::minkowski12(),
    ]
}

fn ga_core(s: &mut Suite) {
    let sigs = standard_signatures();
    s.check("associativity_integer", 0.0, |rng| {
        sigs.iter()
            .map(|sig| {
                let (a, b, c) = (
                    sample::int_multivector(rng, sig),
                    sample::int_multivector(rng, sig),
                    sample::int_multivector(rng, sig),
                );
                (&(&a * &b) * &c).max_abs_diff(&(&a * &(&b * &c)))
            })
            .fold(0.0, f64::max)
    });
    s.check("associativity_float", 1e-12, |rng| {
        sigs.iter()
            .map(|sig| {
                let (a, b, c) = (
                    sample::multivector(rng, sig),
                    sample::multivector(rng, sig),
                    sample::multivector(rng, sig),
                );
                (&(&a * &b) * &c).max_abs_diff(&(&a * &(&b * &c)))
            })
            .fold(0.0, f64::max)
    });
    s.check("reverse_anti_automorphism", 1e-12, |rng| {
        sigs.iter()
            .map(|sig| {
                let (a, b) = (sample::multivector(rng, sig), sample::multivector(rng, sig));
                (&a * &b).reverse().max_abs_diff(&(&b.reverse() * &a.reverse()))
            })
            .fold(0.0, f64::max)
    });
    let mut contract = 0.0f64;
    for sig in &sigs {
        for i in 0..sig.dim() {
            let gi = Multivector::generator(sig, i);
            contract = contract.max(((&gi * &gi).scalar_part() - sig.square(i)).abs());
            for j in 0..sig.dim() {
                if i != j {
                    let gj = Multivector::generator(sig, j);
                    contract = contract.max((&(&gi * &gj) + &(&gj * &gi)).max_abs());
                }
            }
        }
    }
    s.once("generator_contract", 0.0, contract);
    s.check("exp_inverse", 1e-12, |rng| {
        sigs.iter()
            .map(|sig| {
                let grade2: Vec<usize> = (0..sig.size()).filter(|m| ga::grade_of(*m) == 2).collect();
                let mask = grade2[rand::Rng::gen_range(rng, 0..grade2.len())];
                let angle = rand::Rng::gen_range(rng, -2.0..=2.0);
                let b = Multivector::blade(sig, mask).scale(angle);
                residual_or_inf(
                    ga::exp_blade(&b).and_then(|p| Ok((p, ga::exp_blade(&-&b)?))),
                    |(p, m)| (&p * &m).max_abs_diff(&Multivector::one(sig)),
                )
            })
            .fold(0.0, f64::max)
    });
    s.check("grade_partition", 0.0, |rng| {
        sigs.iter()
            .map(|sig| {
                let a = sample::multivector(rng, sig);
                let mut sum = Multivector::zero(sig);
                for k in 0..=sig.dim() {
                    sum += &a.grade(k).expect("grade in range");
                }
                sum.max_abs_diff(&a)
            })
            .fold(0.0, f64::max)
    });
}

fn quat_rep_suite(s: &mut Suite) {
    let g4 = Signature::euclidean4();
    s.check("quaternion_embedding", 0.0, |rng| {
        let (a, b) = (sample::int_quaternion(rng), sample::int_quaternion(rng));
        quat_mul(a, b)
            .to_multivector()
            .max_abs_diff(&(&a.to_multivector() * &b.to_multivector()))
    });
    s.check("rep_e_homomorphism", 1e-12, |rng| {
        let (a, b) = (sample::multivector(rng, &g4), sample::multivector(rng, &g4));
        let lhs = quat_rep::rep_e(&(&a * &b)).unwrap();
        let rhs = quat_rep::rep_e(&a).unwrap().matmul(&quat_rep::rep_e(&b).unwrap());
        lhs.max_abs_diff(&rhs)
    });
    s.check("rep_i_homomorphism", 1e-12, |rng| {
        let (a, b) = (sample::multivector(rng, &g4), sample::multivector(rng, &g4));
        let lhs = quat_rep::rep_I(&(&a * &b)).unwrap();
        let rhs = quat_rep::rep_I(&a).unwrap().matmul(&quat_rep::rep_I(&b).unwrap());
        lhs.max_abs_diff(&rhs)
    });
    let faithful = (0..16)
        .map(|mask| {
            let b = Multivector::blade(&g4, mask);
            let e = quat_rep::unrep_e(&quat_rep::rep_e(&b).unwrap()).max_abs_diff(&b);
            let i = quat_rep::unrep_I(&quat_rep::rep_I(&b).unwrap()).max_abs_diff(&b);
            e.max(i)
        })
        .fold(0.0, f64::max);
    s.once("unrep_faithful_on_blades", 0.0, faithful);
    s.check("change_basis", 1e-12, |rng| {
        let g = sample::multivector(rng, &g4);
        quat_rep::change_basis(&quat_rep::rep_I(&g).unwrap()).max_abs_diff(&quat_rep::rep_e(&g).unwrap())
    });
    let a = quat_rep::a_matrix();
    s.once(
        "a_unitary",
        1e-15,
        a.matmul(&a.star()).max_abs_diff(&QuatMatrix2::identity()),
    );
    let ids = quat_rep::idempotent_identities();
    s.once("spectral_identities", 1e-12, ids.max_residual());
    // B·B* must stay at least ½ away from the identity
    s.once("b_singular", 0.0, (0.5 - ids.b_b_star_deviation).max(0.0));
}

fn iso_suite(s: &mut Suite) {
    let g4 = Signature::euclidean4();
    let sta = Signature::spacetime();
    s.check("g4_to_sta_homomorphism", 1e-12, |rng| {
        let (a, b) = (sample::multivector(rng, &g4), sample::multivector(rng, &g4));
        let lhs = iso::g4_to_sta(&(&a * &b)).unwrap();
        let rhs = &iso::g4_to_sta(&a).unwrap() * &iso::g4_to_sta(&b).unwrap();
        lhs.max_abs_diff(&rhs)
    });
    s.check("sta_to_g4_homomorphism", 1e-12, |rng| {
        let (a, b) = (sample::multivector(rng, &sta), sample::multivector(rng, &sta));
        let lhs = iso::sta_to_g4(&(&a * &b)).unwrap();
        let rhs = &iso::sta_to_g4(&a).unwrap() * &iso::sta_to_g4(&b).unwrap();
        lhs.max_abs_diff(&rhs)
    });
    s.check("mutually_inverse", 1e-12, |rng| {
        let a = sample::multivector(rng, &g4);
        let b = sample::multivector(rng, &sta);
        let ra = iso::sta_to_g4(&iso::g4_to_sta(&a).unwrap()).unwrap().max_abs_diff(&a);
        let rb = iso::g4_to_sta(&iso::sta_to_g4(&b).unwrap()).unwrap().max_abs_diff(&b);
        ra.max(rb)
    });
    let blades = (0..16)
        .map(|mask| {
            let b = Multivector::blade(&g4, mask);
            iso::sta_to_g4(&iso::g4_to_sta(&b).unwrap()).unwrap().max_abs_diff(&b)
        })
        .fold(0.0, f64::max);
    s.once("blade_round_trip", 0.0, blades);
}

fn finite_difference(
    lift: impl Fn(&PlanePoint) -> Multivector,
    x: &PlanePoint,
    dx: &[f64; 3],
    h: f64,
) -> Multivector {
    let shift = |sign: f64| PlanePoint::new([x.x[0] + sign * h * dx[0], x.x[1] + sign * h * dx[1], x.x[2] + sign * h * dx[2]]);
    (&lift(&shift(1.0)) - &lift(&shift(-1.0))).scale(1.0 / (2.0 * h))
}

fn stereo_suite(s: &mut Suite) {
    let g4 = Signature::euclidean4();
    let sta = Signature::spacetime();
    let e0 = Multivector::generator(&g4, 0);
    let g0 = Multivector::generator(&sta, 0);
    s.check("sphere_round_trip", 1e-10, |rng| {
        let x = sample::plane_point(rng, 3.0);
        residual_or_inf(stereo::project_sphere(&stereo::lift_sphere(&x)), |y| y.max_abs_diff(&x))
    });
    s.check("hyper_round_trip", 1e-10, |rng| {
        let x = sample::plane_point(rng, 0.9);
        residual_or_inf(stereo::lift_hyper(&x), |a| stereo::project_hyper(&a).max_abs_diff(&x))
    });
    s.check("lift_unit_norm", 1e-12, |rng| {
        let xs = sample::plane_point(rng, 3.0);
        let xh = sample::plane_point(rng, 0.9);
        let a = stereo::lift_sphere(&xs);
        let rs = ((a.a_hat() * a.a_hat()).scalar_part() - 1.0).abs();
        let rh = residual_or_inf(stereo::lift_hyper(&xh), |b| {
            ((b.a_hat() * b.a_hat()).scalar_part() - 1.0).abs()
        });
        rs.max(rh)
    });
    s.check("sphere_rotor_sandwich", 1e-10, |rng| {
        let x = sample::plane_point(rng, 3.0);
        let r = stereo::sphere_rotor(&x);
        let image = &(&r.rotor * &e0) * &r.rotor.reverse();
        let unit = (&r.rotor * &r.rotor.reverse()).max_abs_diff(&Multivector::one(&g4));
        let one_sided = &stereo::sphere_one_sided(&x) * &e0;
        let lifted = stereo::lift_sphere(&x);
        image
            .max_abs_diff(lifted.a_hat())
            .max(unit)
            .max(one_sided.max_abs_diff(lifted.a_hat()))
    });
    s.check("hyper_boost_sandwich", 1e-10, |rng| {
        let x = sample::plane_point(rng, 0.9);
        residual_or_inf(stereo::hyper_boost(&x).and_then(|b| Ok((b, stereo::lift_hyper(&x)?))), |(b, a)| {
            let image = &(&b.rotor * &g0) * &b.rotor.reverse();
            image.max_abs_diff(a.a_hat())
        })
    });
    s.check("trig_identities", 1e-12, |rng| {
        let xs = sample::plane_point(rng, 3.0);
        let xh = sample::plane_point(rng, 0.9);
        let r = stereo::sphere_rotor(&xs);
        let rs = (r.cos_theta.powi(2) + r.sin_theta.powi(2) - 1.0).abs();
        let rh = residual_or_inf(stereo::hyper_boost(&xh), |b| {
            (b.cosh_phi.powi(2) - b.sinh_phi.powi(2) - 1.0).abs() / b.cosh_phi.powi(2)
        });
        rs.max(rh)
    });
    let half = stereo::hyper_boost(&PlanePoint::new([0.5, 0.0, 0.0]))
        .map(|b| (b.cosh_phi - 5.0 / 3.0).abs().max((b.sinh_phi - 4.0 / 3.0).abs()))
        .unwrap_or(f64::INFINITY);
    s.once("hyper_half_case", 1e-12, half);
    let h = 1e-5;
    s.check("sphere_metric_fd", 1e-6, |rng| {
        let x = sample::plane_point(rng, 3.0);
        let dx = sample::unit3(rng);
        let le = stereo::sphere_metric(&x, &dx);
        let fd = finite_difference(|p| stereo::lift_sphere(p).a_hat().clone(), &x, &dx, h);
        let fd2 = (&fd * &fd).scalar_part();
        ((fd2 - le.ds2) / le.ds2).abs()
    });
    s.check("hyper_metric_fd", 1e-6, |rng| {
        let x = sample::plane_point(rng, 0.9);
        let dx = sample::unit3(rng);
        residual_or_inf(stereo::hyper_metric(&x, &dx), |le| {
            let fd = finite_difference(
                |p| stereo::lift_hyper(p).expect("inside the ball").a_hat().clone(),
                &x,
                &dx,
                h,
            );
            let fd2 = (&fd * &fd).scalar_part();
            ((fd2 - le.ds2) / le.ds2).abs()
        })
    });
    s.check("metric_tangency", 1e-12, |rng| {
        let xs = sample::plane_point(rng, 3.0);
        let xh = sample::plane_point(rng, 0.9);
        let dx = sample::vector3(rng);
        let le = stereo::sphere_metric(&xs, &dx);
        let rs = ga::dot(&le.da_hat, stereo::lift_sphere(&xs).a_hat()).unwrap().abs();
        let rh = residual_or_inf(stereo::hyper_metric(&xh, &dx), |le| {
            let a = stereo::lift_hyper(&xh).expect("inside the ball");
            ga::dot(&le.da_hat, a.a_hat()).unwrap().abs() / a.a_hat().max_abs().powi(2)
        });
        rs.max(rh)
    });
}

fn gspinor_suite(s: &mut Suite) {
    for (tag, ideal, canon, triple, bounds) in [
        (
            AlgebraTag::Pauli3,
            "g3_ideal_closure",
            "g3_canonical_reconstruction",
            "g3_fidelity_triple",
            "g3_fidelity_in_unit_interval",
        ),
        (
            AlgebraTag::Minkowski12,
            "g12_ideal_closure",
            "g12_canonical_reconstruction",
            "g12_fidelity_triple",
            "g12_fidelity_at_least_one",
        ),
    ] {
        let idem = gspinor::idempotent(tag).unwrap();
        s.check(ideal, 0.0, |rng| {
            let m = sample::gspinor(rng, tag).to_multivector();
            (&m * &idem).max_abs_diff(&m)
        });
        s.check(canon, 1e-12, |rng| {
            let psi = sample::gspinor(rng, tag);
            residual_or_inf(psi.canonical_form(), |c| {
                GSpinor::reconstruct(tag, &c)
                    .unwrap()
                    .max_abs_diff(&psi.to_multivector())
            })
        });
        s.check(triple, 1e-10, |rng| {
            let (a, b) = (sample::gspinor(rng, tag), sample::gspinor(rng, tag));
            residual_or_inf(gspinor::fidelity_routes(&a, &b), |r| {
                r.spread().max((r.doubled_chain - 2.0 * r.chain).abs())
            })
        });
        s.check(bounds, 1e-12, |rng| {
            let (a, b) = (sample::gspinor(rng, tag), sample::gspinor(rng, tag));
            residual_or_inf(gspinor::fidelity(&a, &b), |f| match tag {
                AlgebraTag::Pauli3 => (-f).max(f - 1.0).max(0.0),
                _ => (1.0 - f).max(0.0),
            })
        });
    }
    s.check("inner_conjugate_symmetry", 1e-12, |rng| {
        [AlgebraTag::Pauli3, AlgebraTag::Minkowski12]
            .into_iter()
            .map(|tag| {
                let (a, b) = (sample::gspinor(rng, tag), sample::gspinor(rng, tag));
                let ab = gspinor::inner(&a, &b).unwrap();
                let ba = gspinor::inner(&b, &a).unwrap();
                let alg = gspinor::inner_in_algebra(&a, &b).unwrap();
                ab.conj().max_abs_diff(ba).max(ab.max_abs_diff(alg))
            })
            .fold(0.0, f64::max)
    });
    s.check("antipode_zero_fidelity", 1e-12, |rng| {
        let mut x = sample::plane_point(rng, 3.0);
        x.x[2] = 0.0;
        if x.norm_sq() < 1e-4 {
            x.x[0] = 0.5;
        }
        let xb = gspinor::antipodal_state(&x).unwrap();
        let a = GSpinor::from_plane(AlgebraTag::Pauli3, [x.x[0], x.x[1]]).unwrap();
        let b = GSpinor::from_plane(AlgebraTag::Pauli3, [xb.x[0], xb.x[1]]).unwrap();
        let ca = a.canonical_form().unwrap();
        let cb = b.canonical_form().unwrap();
        let perpendicular = ga::dot(&ca.m, &cb.m).unwrap().abs();
        let f = gspinor::fidelity(&a, &b).unwrap().abs();
        let la = stereo::lift_sphere(&x);
        let lb = stereo::lift_sphere(&xb);
        let opposite = (la.a_hat() + lb.a_hat()).max_abs();
        perpendicular.max(f).max(opposite)
    });
}

fn qspinor_suite(s: &mut Suite) {
    let tag = AlgebraTag::Spacetime13;
    let vp = qspinor::v_plus(tag).unwrap();
    s.check("ideal_closure", 1e-15, |rng| {
        let m = sample::qspinor(rng, tag).to_multivector();
        (&m * &vp).max_abs_diff(&m)
    });
    s.check("canonical_reconstruction", 1e-12, |rng| {
        let psi = sample::qspinor(rng, tag);
        residual_or_inf(psi.canonical_q(), |c| {
            let phase = iso::g4_to_sta(&c.phase.to_multivector()).unwrap();
            let rebuilt = (&(&phase * &c.m_hat) * &vp).scale(c.rho);
            rebuilt.max_abs_diff(&psi.to_multivector())
        })
    });
    s.check("m_squared", 1e-12, |rng| {
        let psi = sample::qspinor(rng, tag);
        residual_or_inf(psi.canonical_q(), |c| {
            let sq = &c.m * &c.m;
            let expected = 1.0 - psi.q1.norm_sq() / psi.q0.norm_sq();
            sq.max_abs_diff(&Multivector::scalar(sq.signature(), expected))
                .max((c.m_squared - expected).abs())
        })
    });
    s.check("m_dual_form", 1e-10, |rng| {
        let psi = sample::qspinor(rng, tag);
        residual_or_inf(psi.canonical_q(), |c| {
            psi.m_spacetime_form().unwrap().max_abs_diff(&c.m)
        })
    });
    s.check("orthogonal_simplification", 1e-12, |rng| {
        let psi = sample::orthogonal_qspinor(rng, tag);
        residual_or_inf(psi.canonical_orthogonal(), |o| {
            let g4 = Signature::euclidean4();
            let xm = Multivector::vector(&g4, &[0.0, o.x_m[0], o.x_m[1], o.x_m[2]]);
            let e0 = Multivector::generator(&g4, 0);
            let m = iso::g4_to_sta(&(&(&Multivector::one(&g4) + &xm) * &e0)).unwrap();
            let m_norm_direct =
                (1.0 - psi.q1.norm_sq() / psi.q0.norm_sq()).sqrt();
            m.max_abs_diff(&o.canonical.m)
                .max((o.m_norm - m_norm_direct).abs())
                .max((o.m_norm - o.canonical.m_squared.sqrt()).abs())
        })
    });
    s.check("projector_closed_form", 1e-12, |rng| {
        let psi = sample::orthogonal_qspinor(rng, tag);
        residual_or_inf(psi.projector_closed_form(), |closed| {
            closed.max_abs_diff(&psi.projector())
        })
    });
    s.check("bra_ket_product", 1e-12, |rng| {
        let psi = sample::qspinor(rng, tag);
        psi.bra_ket_product()
            .max_abs_diff(&vp.scale(2.0 * psi.rho_sq()))
    });
    s.check("fidelity_dual_route", 1e-10, |rng| {
        let (a, b) = (sample::qspinor(rng, tag), sample::qspinor(rng, tag));
        residual_or_inf(qspinor::fidelity_q_routes(&a, &b), |r| {
            (r.chain - r.circ_form).abs().max(r.chain_nonscalar)
        })
    });
    s.check("rho_phase_invariance", 1e-12, |rng| {
        let psi = sample::qspinor(rng, tag);
        let p = sample::quaternion(rng);
        let p = p.scale(1.0 / p.norm());
        let rotated = psi.left_mul(p);
        let g0_coeff = |q: &QSpinor| q.projector().coeff(1);
        (psi.rho_sq().sqrt() - rotated.rho_sq().sqrt())
            .abs()
            .max((g0_coeff(&psi) - g0_coeff(&rotated)).abs())
    });
    s.check("circ_otimes_algebra", 0.0, |rng| {
        let (a, b, c) = (
            sample::int_quaternion(rng),
            sample::int_quaternion(rng),
            sample::int_quaternion(rng),
        );
        let k = f64::from(rand::Rng::gen_range(rng, -4i32..=4));
        let split = (qspinor::circ(a, b) + qspinor::otimes(a, b)).max_abs_diff(quat_mul(a, b));
        let symmetry = qspinor::circ(a, b)
            .max_abs_diff(qspinor::circ(b, a))
            .max(qspinor::otimes(a, b).max_abs_diff(-qspinor::otimes(b, a)));
        let linear = qspinor::circ(a.scale(k) + c, b)
            .max_abs_diff(qspinor::circ(a, b).scale(k) + qspinor::circ(c, b))
            .max(
                qspinor::otimes(a.scale(k) + c, b)
                    .max_abs_diff(qspinor::otimes(a, b).scale(k) + qspinor::otimes(c, b)),
            );
        let (g0, g1) = qspinor::grade_parts(a, b);
        let parts = (Quaternion::scalar(g0) + g1).max_abs_diff(quat_mul(b, a.conj()));
        split.max(symmetry).max(linear).max(parts)
    });
    s.check("reduction_consistency", 1e-10, |rng| {
        let (a, b) = (
            sample::gspinor(rng, AlgebraTag::Minkowski12),
            sample::gspinor(rng, AlgebraTag::Minkowski12),
        );
        let fg = gspinor::fidelity(&a, &b);
        let fq = qspinor::from_gspinor(&a)
            .and_then(|qa| Ok((qa, qspinor::from_gspinor(&b)?)))
            .and_then(|(qa, qb)| qspinor::fidelity_q(&qa, &qb));
        match (fg, fq) {
            (Ok(x), Ok(y)) => (x - y).abs(),
            _ => f64::INFINITY,
        }
    });
}

fn dirac_suite(s: &mut Suite) {
    let all = DiracIdempotent::all().map(DiracIdempotent::element);
    let one = dirac::ComplexMultivector::real(Multivector::one(&Signature::spacetime()));
    let mut spectral = 0.0f64;
    let mut sum = dirac::ComplexMultivector::zero();
    for (a, ua) in all.iter().enumerate() {
        sum = &sum + ua;
        for (b, ub) in all.iter().enumerate() {
            let expected = if a == b { ua.clone() } else { dirac::ComplexMultivector::zero() };
            spectral = spectral.max((ua * ub).max_abs_diff(&expected));
        }
    }
    spectral = spectral.max(sum.max_abs_diff(&one));
    s.once("idempotents_complete_orthogonal", 0.0, spectral);
    let sta = Signature::spacetime();
    let g21 = dirac::ComplexMultivector::real(Multivector::blade(&sta, 0b0110).scale(-1.0));
    let mut j_action = 0.0f64;
    for k in 0..8 {
        let mut r = [0.0; 8];
        r[k] = 1.0;
        let phi = dirac::DiracSpinor4::from_reals(&r).unwrap();
        let lhs = dirac::dirac_to_geometric(&phi.times_j());
        let rhs = &dirac::dirac_to_geometric(&phi) * &g21;
        j_action = j_action.max(lhs.max_abs_diff(&rhs));
    }
    s.once("j_action_right_gamma21", 0.0, j_action);
    let jr = dirac::j_definitions();
    s.once("j_sign_relation", 0.0, jr.sum_residual.max(jr.u_residual_minus_ji));
    s.check("round_trip", 1e-12, |rng| {
        let phi = sample::dirac(rng);
        let m = dirac::dirac_to_geometric(&phi);
        residual_or_inf(dirac::geometric_to_qspinor(&m), |psi| {
            let back = dirac::qspinor_to_dirac(&psi);
            back.max_abs_diff(&phi)
                .max(dirac::dirac_to_geometric(&back).max_abs_diff(&m))
        })
    });
    s.check("expansion_display", 1e-12, |rng| {
        let phi = sample::dirac(rng);
        let m = dirac::dirac_to_geometric(&phi);
        let x = dirac::ComplexMultivector::real(dirac::expansion_coefficient(&phi));
        let via_right = dirac::dirac_to_geometric_right_action(&phi);
        (&x * &dirac::u_plus_plus()).max_abs_diff(&m).max(via_right.max_abs_diff(&m))
    });
    s.check("linearity", 1e-12, |rng| {
        let (a, b) = (sample::dirac(rng), sample::dirac(rng));
        let k = rand::Rng::gen_range(rng, -2.0..=2.0);
        let mut combo = a;
        for (z, w) in combo.phi.iter_mut().zip(b.phi) {
            *z = *z * k + w;
        }
        let lhs = dirac::dirac_to_geometric(&combo);
        let rhs = &dirac::dirac_to_geometric(&a).scale(k) + &dirac::dirac_to_geometric(&b);
        let j_lin = dirac::dirac_to_geometric(&a.times_j())
            .max_abs_diff(&dirac::dirac_to_geometric(&a).times_j());
        lhs.max_abs_diff(&rhs).max(j_lin)
    });
    s.check("norm_transport", 1e-12, |rng| {
        let phi = sample::dirac(rng);
        (dirac::ideal_norm(&dirac::dirac_to_geometric(&phi)) - phi.norm_sq()).abs()
    });
}

type SuiteFn = fn(&mut Suite);

const SUITES: [(&str, SuiteFn); 7] = [
    ("dirac-bridge", dirac_suite),
    ("ga-core", ga_core),
    ("gspinor", gspinor_suite),
    ("iso-map", iso_suite),
    ("qspinor", qspinor_suite),
    ("quat-rep", quat_rep_suite),
    ("stereo", stereo_suite),
];

/// Runs every suite with `cases` random cases per property. Suites run on
/// separate threads; the report is ordered by suite name.
pub fn run(seed: u64, cases: usize, tol_override: Option<f64>) -> RunReport {
    let mut suites: Vec<SuiteReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = SUITES
            .iter()
            .enumerate()
            .map(|(index, (name, body))| {
                scope.spawn(move || {
                    let mut suite = Suite::new(name, index as u64, seed, cases, tol_override);
                    body(&mut suite);
                    suite.finish()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    });
    suites.sort_by_key(|s| s.suite);
    RunReport {
        seed,
        cases,
        tol_override,
        suites,
    }
}
