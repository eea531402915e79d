use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use chevalley::{SVec, Surd, Q};
use tensor::{
    hermitian, invariance, jacobi_contraction, nijenhuis_report, square_report, torsion_form, torsion_type,
    CheckReport, Endomorphism,
};

use crate::{solve, CosetDecomposition, KtError};

/// Signs ε_α on the positive roots of m, from a regular element λ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityAssignment {
    /// ε for each entry of `m_roots`; ε(−α) = −ε(α) is implied.
    pub eps: Vec<i8>,
    /// λ per simple ideal, as coefficients over the H_i.
    pub lambda: Vec<Vec<Q>>,
}

impl PositivityAssignment {
    pub fn flipped(&self) -> PositivityAssignment {
        PositivityAssignment {
            eps: self.eps.iter().map(|e| -e).collect(),
            lambda: self.lambda.iter().map(|l| l.iter().map(|x| -*x).collect()).collect(),
        }
    }

    /// ε on an arbitrary root of m.
    pub fn sign(&self, d: &CosetDecomposition, ideal: usize, root: usize) -> Option<i8> {
        let p = d.m_position(ideal, root)?;
        let positive = d.g().ideal(ideal).roots.is_positive(root);
        Some(if positive { self.eps[p] } else { -self.eps[p] })
    }
}

/// α(λ) for λ = Σ x_i H_i.
fn root_value(d: &CosetDecomposition, ideal: usize, root: usize, x: &[Q]) -> Q {
    let rs = &d.g().ideal(ideal).roots;
    (0..rs.rank()).fold(Q::zero(), |acc, i| acc + x[i] * rs.pairing(root, rs.simple_root_index(i)))
}

/// λ = Σ_j w_j ω_j over the fundamental coweights of the uncoloured nodes,
/// so that α(λ) = Σ_j w_j n_j(α) with n_j the simple coefficients.
/// Weights of coloured nodes are ignored.
pub fn coweight_lambda(d: &CosetDecomposition, weights: &[Vec<Q>]) -> Vec<Vec<Q>> {
    d.g()
        .ideals()
        .iter()
        .zip(&d.colourings)
        .zip(weights)
        .map(|((id, c), w)| {
            let rs = &id.roots;
            let r = rs.rank();
            let a: Vec<Vec<Q>> = (0..r)
                .map(|j| (0..r).map(|i| rs.pairing(rs.simple_root_index(j), rs.simple_root_index(i))).collect())
                .collect();
            let b: Vec<Q> = (0..r).map(|j| if c.contains(j) { Q::zero() } else { w[j] }).collect();
            solve(a, b).expect("cartan matrix is invertible")
        })
        .collect()
}

/// All uncoloured coweights with weight one: α(λ) is the uncoloured height.
pub fn default_lambda(d: &CosetDecomposition) -> Vec<Vec<Q>> {
    let ones: Vec<Vec<Q>> = d.g().ideals().iter().map(|id| vec![Q::one(); id.roots.rank()]).collect();
    coweight_lambda(d, &ones)
}

pub fn positivity_from_regular(d: &CosetDecomposition, lambda: &[Vec<Q>]) -> Result<PositivityAssignment, KtError> {
    if lambda.len() != d.g().ideals().len() {
        return Err(KtError::SeedShape { expected: d.g().ideals().len(), found: lambda.len() });
    }
    for (k, l) in lambda.iter().enumerate() {
        let r = d.g().ideal(k).roots.rank();
        if l.len() != r {
            return Err(KtError::SeedShape { expected: r, found: l.len() });
        }
    }
    let mut eps = Vec::with_capacity(d.m_roots.len());
    for r in &d.m_roots {
        let v = root_value(d, r.ideal, r.root, &lambda[r.ideal]);
        if v.is_zero() {
            let rs = &d.g().ideal(r.ideal).roots;
            return Err(KtError::NotRegular { ideal: r.ideal, root: format!("{:?}", rs.root(r.root).simple_coeffs) });
        }
        eps.push(if v > Q::zero() { 1 } else { -1 });
    }
    Ok(PositivityAssignment { eps, lambda: lambda.to_vec() })
}

/// Exhaustive scan of the sign conditions: ε(−α) = −ε(α); ε constant along
/// k-strings through m; closure of equal-sign sums inside m.
pub fn check_positivity(d: &CosetDecomposition, p: &PositivityAssignment) -> CheckReport {
    let mut rep = CheckReport::new("positivity");
    for (ideal, id) in d.g().ideals().iter().enumerate() {
        let rs = &id.roots;
        for a in 0..rs.num_roots() {
            let Some(ea) = p.sign(d, ideal, a) else { continue };
            rep.checked += 1;
            if p.sign(d, ideal, rs.neg(a)) != Some(-ea) {
                rep.fail(|| format!("sign of -{:?}", rs.root(a).simple_coeffs));
            }
            for b in 0..rs.num_roots() {
                let Some(s) = rs.add(a, b) else { continue };
                let Some(es) = p.sign(d, ideal, s) else { continue };
                rep.checked += 1;
                match p.sign(d, ideal, b) {
                    None if es != ea => rep.fail(|| {
                        format!("isotropy string {:?} + {:?}", rs.root(a).simple_coeffs, rs.root(b).simple_coeffs)
                    }),
                    Some(eb) if eb == ea && es != ea => rep.fail(|| {
                        format!("sum {:?} + {:?} changes sign", rs.root(a).simple_coeffs, rs.root(b).simple_coeffs)
                    }),
                    _ => {}
                }
            }
        }
    }
    rep
}

/// A B-orthogonal Cartan frame of m paired as I(v_a) = r v_b,
/// I(v_b) = −v_a / r, with r² = B(v_a,v_a)/B(v_b,v_b).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanPairing {
    /// (a, b, r²) over m-frame indices.
    pub pairs: Vec<(usize, usize, Q)>,
}

/// Consecutive pairing of the Cartan part of m with norm-ratio coefficients.
pub fn solve_cartan_pairing(d: &CosetDecomposition) -> Result<CartanPairing, KtError> {
    let off = d.cartan_offset();
    let n = d.cartan_dim();
    if n % 2 == 1 {
        return Err(KtError::OddDimension(d.dim_m()));
    }
    let norms = d.space.m_norms();
    let mut pairs = Vec::new();
    for i in (0..n).step_by(2) {
        let (a, b) = (off + i, off + i + 1);
        if norms[a].is_zero() || norms[b].is_zero() {
            return Err(KtError::DegenerateMetric);
        }
        pairs.push((a, b, norms[a] / norms[b]));
    }
    Ok(CartanPairing { pairs })
}

/// I(E⁺_α) = −ε_α E⁻_α, I(E⁻_α) = ε_α E⁺_α, and the Cartan pairing.
pub fn complex_structure(
    d: &CosetDecomposition,
    p: &PositivityAssignment,
    pairing: &CartanPairing,
) -> Result<Endomorphism, KtError> {
    if d.dim_m() % 2 == 1 {
        return Err(KtError::OddDimension(d.dim_m()));
    }
    let mut cols = vec![SVec::new(); d.dim_m()];
    for (k, e) in p.eps.iter().enumerate() {
        let e = Surd::from_int(*e as i128);
        cols[2 * k] = SVec::single(2 * k + 1, -e.clone());
        cols[2 * k + 1] = SVec::single(2 * k, e);
    }
    let mut covered = vec![false; d.cartan_dim()];
    for &(a, b, r2) in &pairing.pairs {
        let r = Surd::sqrt(r2);
        let rinv = r.inv().ok_or(KtError::DegenerateMetric)?;
        cols[a] = SVec::single(b, r);
        cols[b] = SVec::single(a, -rinv);
        for x in [a, b] {
            let i = x.checked_sub(d.cartan_offset()).filter(|&i| i < covered.len()).ok_or(KtError::PairingIncomplete)?;
            covered[i] = true;
        }
    }
    if covered.iter().any(|c| !c) {
        return Err(KtError::PairingIncomplete);
    }
    Ok(Endomorphism::from_columns(cols))
}

/// Outcome of the KT battery.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KtReport {
    pub dim_m: usize,
    pub positive_roots_m: usize,
    pub checks: Vec<CheckReport>,
}

impl KtReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Square, invariance, integrability, hermiticity and torsion type of H.
pub fn verify_kt(d: &CosetDecomposition, cx: &Endomorphism) -> Result<KtReport, KtError> {
    let mut checks = vec![square_report(cx)];
    checks.push(invariance(&d.space, cx)?);
    if checks[0].passed() {
        checks.push(nijenhuis_report(&d.space, cx)?);
        checks.push(hermitian(&d.space, cx)?);
        let h = torsion_form(&d.space)?.to_surd();
        checks.push(torsion_type(&h, cx)?);
    }
    Ok(KtReport { dim_m: d.dim_m(), positive_roots_m: d.m_roots.len(), checks })
}

/// verify_kt plus the positivity scan and the Jacobi contraction.
pub fn verify_kt_full(d: &CosetDecomposition, p: &PositivityAssignment, cx: &Endomorphism) -> Result<KtReport, KtError> {
    let mut r = verify_kt(d, cx)?;
    r.checks.push(check_positivity(d, p));
    r.checks.push(jacobi_contraction(&d.space));
    Ok(r)
}

/// Default structure: λ from the uncoloured coweights, consecutive pairing.
pub fn default_structure(d: &CosetDecomposition) -> Result<(PositivityAssignment, Endomorphism), KtError> {
    let p = positivity_from_regular(d, &default_lambda(d))?;
    let pairing = solve_cartan_pairing(d)?;
    let cx = complex_structure(d, &p, &pairing)?;
    Ok((p, cx))
}
