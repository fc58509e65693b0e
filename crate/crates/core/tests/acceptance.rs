//! Acceptance criteria. Each criterion prints one `PASS` or `FAIL` line; the
//! target exits non-zero if any criterion fails.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::time::{Duration, Instant};

use num_complex::Complex64;

use qpoincare::export::embedded_dmatrix;
use qpoincare::hopf_a::AMonomial;
use qpoincare::invariants::{gram_signature, invariant_functional_space, left_invariance_defect, right_invariance_defect, GramSpace};
use qpoincare::linalg::Signature;
use qpoincare::repr::orthogonality_ksum;
use qpoincare::report::Status;
use qpoincare::scalars::CycField;
use qpoincare::suite::{run_suite, Suite};

/// Absolute error allowed per coefficient in the numeric comparisons.
const NUMERIC_TOL: f64 = 1e-10;
/// Wall-clock budget for the Hopf-axiom suite over p = 3, 5, 7.
const HOPF_BUDGET: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;

/// Runs a suite and requires every listed assertion to be present and passing.
fn require(p: u32, suite: Suite, ids: &[&str]) -> Outcome {
    let report = run_suite(p, suite, 0).map_err(|e| format!("p={p}: {e}"))?;
    for id in ids {
        let r = report
            .results
            .iter()
            .find(|r| r.assertion_id == *id)
            .ok_or_else(|| format!("p={p}: {id} missing"))?;
        if r.status != Status::Pass {
            return Err(format!("p={p}: {id}: {}", r.detail));
        }
    }
    Ok(format!("p={p} ok"))
}

fn all_of(parts: impl IntoIterator<Item = Outcome>) -> Outcome {
    let mut notes = Vec::new();
    for part in parts {
        notes.push(part?);
    }
    Ok(notes.join("; "))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let ids = [
        "hopf.a.coassociativity",
        "hopf.a.counit",
        "hopf.a.antipode",
    ];
    let out = all_of([3, 5, 7].map(|p| require(p, Suite::Hopf, &ids)))?;
    let elapsed = start.elapsed();
    if elapsed > HOPF_BUDGET {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{out}; {elapsed:.1?}"))
}

fn criterion_2() -> Outcome {
    let ids = ["duality.product_rule", "duality.coproduct_rule", "duality.nondegenerate"];
    all_of([3, 5].map(|p| require(p, Suite::Duality, &ids)))
}

fn criterion_3() -> Outcome {
    let ids = ["integral.left_invariance", "integral.right_invariance", "integral.uniqueness"];
    all_of([3, 5, 7].map(|p| {
        require(p, Suite::Integral, &ids)?;
        let field = CycField::new(p).unwrap();
        for a in AMonomial::all(p) {
            if !left_invariance_defect(field, &a).is_zero() || !right_invariance_defect(field, &a).is_zero() {
                return Err(format!("p={p}: invariance fails on {a:?}"));
            }
        }
        let space = invariant_functional_space(field);
        if space.len() != 1 {
            return Err(format!("p={p}: solution space has dimension {}", space.len()));
        }
        // the only nonzero value sits on eta+^{p-1} eta-^{p-1}
        let top = AMonomial::all(p).position(|a| a == AMonomial::new(p - 1, p - 1, 0)).unwrap();
        let support: Vec<usize> = (0..space[0].len()).filter(|&i| !space[0][i].is_zero()).collect();
        if support != [top] {
            return Err(format!("p={p}: generator supported on {support:?}"));
        }
        Ok(format!("p={p} ok"))
    }))
}

fn criterion_4() -> Outcome {
    all_of([3u32, 5, 7].map(|p| {
        let field = CycField::new(p).unwrap();
        let so = gram_signature(field, GramSpace::So);
        let m = gram_signature(field, GramSpace::M);
        let want_so = Signature { pos: (p as usize).div_ceil(2), neg: (p as usize - 1) / 2, zero: 0 };
        let pp = (p * p) as usize;
        let want_m = Signature { pos: pp.div_ceil(2), neg: (pp - 1) / 2, zero: 0 };
        if so != want_so || m != want_m {
            return Err(format!("p={p}: SO {so:?}, M {m:?}"));
        }
        Ok(format!("p={p} ({}, {}) ({}, {})", so.pos, so.neg, m.pos, m.neg))
    }))
}

fn criterion_5() -> Outcome {
    let ids = ["repr.rep.relations", "repr.rep.kappa_order", "repr.rep.central", "repr.rep.star"];
    all_of([3, 5].map(|p| require(p, Suite::Repr, &ids)))
}

fn criterion_6() -> Outcome {
    let ids = [
        "repr.unitarity.general",
        "repr.unitarity.origin",
        "repr.unitarity.paired",
        "repr.addition_theorem",
        "repr.counit_slice",
    ];
    all_of([3, 5].map(|p| require(p, Suite::Repr, &ids)))
}

fn criterion_7() -> Outcome {
    let ids = ["repr.closed.printed", "repr.closed.term_by_term", "repr.closed.bessel"];
    all_of([3, 5].map(|p| require(p, Suite::Repr, &ids)))
}

fn criterion_8() -> Outcome {
    let ids = [
        "repr.recurrence.p_plus",
        "repr.recurrence.p_plus_wrap",
        "repr.recurrence.p_minus",
        "repr.recurrence.p_minus_wrap",
        "repr.casimir",
        "repr.weight",
        "repr.plane_wave.eigen",
    ];
    all_of([3, 5].map(|p| require(p, Suite::Repr, &ids)))
}

fn criterion_9() -> Outcome {
    let ids = ["repr.orthogonality.vanishing", "repr.orthogonality.n_independent", "repr.orthogonality.ksum"];
    all_of([3, 5].map(|p| {
        require(p, Suite::Repr, &ids)?;
        let exact = orthogonality_ksum(CycField::new(p).unwrap()).to_complex();
        let float = ksum_float(p);
        if (exact - float).norm() > NUMERIC_TOL {
            return Err(format!("p={p}: k-sum {exact} vs {float}"));
        }
        Ok(format!("p={p} k-sum {:.6}", float.re))
    }))
}

fn criterion_10() -> Outcome {
    let p = 5;
    let field = CycField::new(p).unwrap();
    let terms = embedded_dmatrix(field, 1.0, 1.0).map_err(|e| e.to_string())?;
    let oracle = FloatModel::new(p).t_matrix(1.0, 1.0);
    let mut got: HashMap<(usize, usize, Mono), Complex64> = HashMap::new();
    let classical = Complex64::new(0.0, -1.0);
    for t in &terms {
        if t.z_plus != 0 || t.z_minus != 0 {
            return Err(format!("entry ({}, {}) has polynomial z dependence", t.m, t.n));
        }
        if (t.exp_plus - classical).norm() > NUMERIC_TOL || (t.exp_minus - classical).norm() > NUMERIC_TOL {
            return Err(format!("entry ({}, {}) has exponent {} {}", t.m, t.n, t.exp_plus, t.exp_minus));
        }
        *got.entry((t.m, t.n, (t.eta_plus, t.eta_minus, t.delta))).or_default() += t.coeff;
    }
    let mut worst = 0.0f64;
    for m in 0..p as usize {
        for n in 0..p as usize {
            let want = &oracle[m][n];
            let keys = want.keys().copied().chain(
                got.keys().filter(|(a, b, _)| (*a, *b) == (m, n)).map(|(_, _, k)| *k),
            );
            for k in keys {
                let a = got.get(&(m, n, k)).copied().unwrap_or_default();
                let b = want.get(&k).copied().unwrap_or_default();
                worst = worst.max((a - b).norm());
            }
        }
    }
    if worst > NUMERIC_TOL {
        return Err(format!("max error {worst:e}"));
    }
    Ok(format!("p=5, {} terms, max error {worst:.1e}", terms.len()))
}

fn ksum_float(p: u32) -> Complex64 {
    let model = FloatModel::new(p);
    (0..p as i64)
        .map(|k| {
            let f = model.q_fact(k) * model.q_fact(p as i64 - 1 - k);
            1.0 / (f * f)
        })
        .sum()
}

/// Monomial `eta+^a eta-^b delta^c`.
type Mono = (u32, u32, u32);
type Elem = HashMap<Mono, Complex64>;
type Mat = Vec<Vec<Elem>>;

/// Plain floating-point model of the reduced group algebra and of the
/// representation `L^lambda`, evaluating the T-matrix product directly.
struct FloatModel {
    p: u32,
    q: Complex64,
}

impl FloatModel {
    fn new(p: u32) -> Self {
        FloatModel { p, q: Complex64::from_polar(1.0, 2.0 * PI / p as f64) }
    }

    fn qp(&self, e: i64) -> Complex64 {
        self.q.powi(e.rem_euclid(self.p as i64) as i32)
    }

    /// `q^{1/2}` as the square of the primitive `4p`-th root `exp(2 pi i / 4p)`.
    fn q_half(&self, sign: i64) -> Complex64 {
        Complex64::from_polar(1.0, sign as f64 * PI / self.p as f64)
    }

    fn q_number(&self, n: i64) -> Complex64 {
        (self.qp(n) - self.qp(-n)) / (self.q - self.q.inv())
    }

    fn q_fact(&self, n: i64) -> Complex64 {
        (1..=n).map(|k| self.q_number(k)).product()
    }

    fn mul_mono(&self, x: Mono, y: Mono) -> Option<(Mono, Complex64)> {
        let (a1, b1, c1) = x;
        let (a2, b2, c2) = y;
        if a1 + a2 >= self.p || b1 + b2 >= self.p {
            return None;
        }
        // delta^c1 eta^(a2+b2) = q^{-2 c1 (a2+b2)} eta^(a2+b2) delta^c1
        // eta-^b1 eta+^a2 = q^{2 b1 a2} eta+^a2 eta-^b1
        let e = -2 * c1 as i64 * (a2 + b2) as i64 + 2 * b1 as i64 * a2 as i64;
        Some(((a1 + a2, b1 + b2, (c1 + c2) % self.p), self.qp(e)))
    }

    fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let mut out = Elem::new();
        for (&mx, &cx) in x {
            for (&my, &cy) in y {
                if let Some((m, c)) = self.mul_mono(mx, my) {
                    *out.entry(m).or_default() += cx * cy * c;
                }
            }
        }
        out
    }

    fn matmul(&self, a: &Mat, b: &Mat) -> Mat {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = Elem::new();
                        for k in 0..n {
                            for (m, c) in self.mul(&a[i][k], &b[k][j]) {
                                *acc.entry(m).or_default() += c;
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }

    fn identity(&self) -> Mat {
        let n = self.p as usize;
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { Elem::from([((0, 0, 0), 1.0.into())]) } else { Elem::new() }).collect())
            .collect()
    }

    fn add_scaled(&self, acc: &mut Mat, x: &Mat, c: Complex64) {
        for (ra, rx) in acc.iter_mut().zip(x) {
            for (ea, ex) in ra.iter_mut().zip(rx) {
                for (m, v) in ex {
                    *ea.entry(*m).or_default() += v * c;
                }
            }
        }
    }

    /// `sum_{k<p} q^{s k(k-1)/2} / [k]! x^k`.
    fn cutoff_exp(&self, x: &Mat, s: i64) -> Mat {
        let mut acc = self.identity();
        let mut power = self.identity();
        for k in 1..self.p as i64 {
            power = self.matmul(&power, x);
            let c = self.qp(s * k * (k - 1) / 2) / self.q_fact(k);
            self.add_scaled(&mut acc, &power, c);
        }
        acc
    }

    /// Matrix entries of `i L(eps+-)` tensored with `eta+-`, where
    /// `eps+- = -q^{-+1/2} p+- kappa^{-1}`, `L(p+-) delta^j = lambda+- delta^{j+-1}`
    /// and `L(kappa) delta^j = q^j delta^j`.
    fn eps_tensor_eta(&self, lambda: f64, s: i64) -> Mat {
        let n = self.p as usize;
        let mut out: Mat = vec![vec![Elem::new(); n]; n];
        let eta = if s > 0 { (1, 0, 0) } else { (0, 1, 0) };
        for j in 0..n {
            let row = (j as i64 + s).rem_euclid(n as i64) as usize;
            let c = Complex64::i() * -self.q_half(-s) * lambda * self.qp(-(j as i64));
            out[row][j].insert(eta, c);
        }
        out
    }

    /// `1/p sum_{m,k} q^{-mk} L(kappa)^m (x) delta^k`.
    fn projector(&self) -> Mat {
        let n = self.p as usize;
        let mut out: Mat = vec![vec![Elem::new(); n]; n];
        for (j, row) in out.iter_mut().enumerate() {
            for m in 0..n as i64 {
                for k in 0..n as i64 {
                    let c = self.qp(m * j as i64 - m * k) / n as f64;
                    *row[j].entry((0, 0, k as u32)).or_default() += c;
                }
            }
        }
        out
    }

    /// The T-matrix with the scalar exponential of the central elements omitted.
    fn t_matrix(&self, lambda_plus: f64, lambda_minus: f64) -> Mat {
        let plus = self.cutoff_exp(&self.eps_tensor_eta(lambda_plus, 1), 1);
        let minus = self.cutoff_exp(&self.eps_tensor_eta(lambda_minus, -1), -1);
        let mut out = self.matmul(&self.matmul(&plus, &minus), &self.projector());
        for row in &mut out {
            for e in row {
                e.retain(|_, v| v.norm() > 1e-14);
            }
        }
        out
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Hopf axioms on all basis monomials, p=3,5,7", criterion_1),
        ("duality rules and non-degenerate pairing, p=3,5", criterion_2),
        ("invariant integral, unique up to scale, p=3,5,7", criterion_3),
        ("Gram signatures, p=3,5,7", criterion_4),
        ("representation relations and star property, p=3,5", criterion_5),
        ("pseudo-unitarity, addition theorem, counit slice, p=3,5", criterion_6),
        ("closed forms and cut-off Bessel row, p=3,5", criterion_7),
        ("recurrences, Casimir, weight, plane waves, p=3,5", criterion_8),
        ("orthogonality of matrix elements, p=3,5", criterion_9),
        ("numeric cross-check of the D-matrix at lambda=(1,1)", criterion_10),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(note) => println!("PASS criterion {}: {name} [{note}]", i + 1),
            Err(why) => {
                println!("FAIL criterion {}: {name} [{why}]", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
