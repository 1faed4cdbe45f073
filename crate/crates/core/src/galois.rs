//! Comatrix corings, the canonical map, the cotensor adjunction and the
//! Galois diagnostics built on them. Only unital `B` is supported, so
//! `Σ† = Σ* ⊗_B B` is identified with `Σ*` throughout.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{
    b_ring_mu, dual_basis_in, left_multiplication_map, multiplication_map, tensor_morphism, tensor_over, transport,
    Action, Algebra, Bimodule, DualBasisCertificate, DualModule, TensorProduct,
};
use crate::axioms::AxiomReport;
use crate::coring::{check_coring, check_coring_morphism, differ, Comodule, Coring};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, kronecker, unit_vector, zero_vector, ExactMatrix, LinearMap, SubspacePresentation, Vector};

fn add_into(acc: &mut [crate::linalg::Rational], v: &[crate::linalg::Rational]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a += b;
    }
}

/// Everything attached to a `B`-`A`-bimodule `Σ` that is finitely generated
/// projective over `A`: `Σ*`, a dual basis and the comatrix coring `Σ* ⊗_B Σ`.
#[derive(Clone, Debug)]
pub struct ComatrixData {
    pub b: Arc<Algebra>,
    pub sigma: Bimodule,
    pub dual: DualModule,
    pub dual_basis: DualBasisCertificate,
    /// `Σ* ⊗_B Σ`, remembering its flat presentation.
    pub tensor: TensorProduct,
    pub coring: Arc<Coring>,
}

/// The comatrix coring with `Δ(φ ⊗ u) = Σ_i (φ ⊗ e_i) ⊗_A (e*_i ⊗ u)` and `ε(φ ⊗ u) = φ(u)`.
pub fn comatrix_coring(sigma: &Bimodule) -> Result<ComatrixData> {
    let a = sigma.right_action()?.algebra.clone();
    let b = sigma.left_action()?.algebra.clone();
    if !a.is_unital() {
        return Err(Error::Unsupported("comatrix corings need a unital base algebra".into()));
    }
    if !b.is_unital() {
        return Err(Error::Unsupported("comatrix corings over a non-unital B are not supported".into()));
    }
    let ring = b_ring_mu(sigma)?;
    let dual_basis = dual_basis_in(sigma, &ring)?;
    if !dual_basis.verify(sigma, &ring.dual)? {
        return Err(Error::NotProjective("dual basis fails Σ e_i e*_i(x) = x".into()));
    }
    let dual = ring.dual;
    let tensor = tensor_over(&dual.module, sigma)?;
    let carrier = tensor.module.clone().atomic();
    let square = tensor_over(&carrier, &carrier)?;
    let (dd, ds) = (dual.module.dim(), sigma.dim());
    let mut flat_cols = Vec::with_capacity(dd * ds);
    for p in 0..dd {
        for j in 0..ds {
            let mut col = zero_vector(square.dim());
            for (x, psi) in &dual_basis.pairs {
                let left = tensor.class_of(&unit_vector(dd, p), x);
                let right = tensor.class_of(psi, &unit_vector(ds, j));
                add_into(&mut col, &square.class_of(&left, &right));
            }
            flat_cols.push(col);
        }
    }
    let flat_delta = ExactMatrix::from_columns(square.dim(), &flat_cols);
    if !(&flat_delta * &tensor.relations).is_zero() {
        return Err(Error::IllDefined("comatrix comultiplication is not B-balanced".into()));
    }
    let delta = &flat_delta * tensor.section();
    let epsilon = &dual.pairing * tensor.section();
    let coring = Coring::new(a, carrier, delta, epsilon)?;
    Ok(ComatrixData { b, sigma: sigma.clone(), dual, dual_basis, tensor, coring: Arc::new(coring) })
}

/// `can(φ ⊗ u) = φ(u_[0])·u_[1]` for a bicomodule `Σ`.
pub fn can_from_coaction(data: &ComatrixData, sigma: &Comodule) -> Result<LinearMap> {
    let c = &sigma.coring;
    let (dd, ds) = (data.dual.module.dim(), data.sigma.dim());
    let sec = sigma.tensor.section();
    let nc = c.dim();
    let mut cols = Vec::with_capacity(dd * ds);
    for p in 0..dd {
        let phi = data.dual.hom.basis_map(p);
        for j in 0..ds {
            let flat = sec.apply(&sigma.coaction.column(j));
            let mut col = zero_vector(nc);
            for (idx, r) in flat.iter().enumerate().filter(|(_, r)| !num_traits::Zero::is_zero(*r)) {
                let (k, cc) = (idx / nc, idx % nc);
                let a = phi.column(k);
                let v = c.carrier.act_left(&a)?.column(cc);
                for (o, vi) in col.iter_mut().zip(v) {
                    *o += r * vi;
                }
            }
            cols.push(col);
        }
    }
    let flat = ExactMatrix::from_columns(nc, &cols);
    if !(&flat * &data.tensor.relations).is_zero() {
        return Err(Error::IllDefined("coaction is not left B-linear, so can is not B-balanced".into()));
    }
    Ok(&flat * data.tensor.section())
}

/// `ρ(u) = Σ_i e_i ⊗ φ(e*_i ⊗ u)`, inverse to [`can_from_coaction`].
pub fn coaction_from_can(data: &ComatrixData, coring: &Arc<Coring>, phi: &LinearMap) -> Result<Comodule> {
    if phi.rows() != coring.dim() || phi.cols() != data.tensor.dim() {
        return Err(Error::Dimension(format!("can must be {}x{}", coring.dim(), data.tensor.dim())));
    }
    let sc = tensor_over(&data.sigma, &coring.carrier)?;
    let ds = data.sigma.dim();
    let cols: Vec<Vector> = (0..ds)
        .map(|j| {
            let mut col = zero_vector(sc.dim());
            for (x, psi) in &data.dual_basis.pairs {
                let c = phi.apply(&data.tensor.class_of(psi, &unit_vector(ds, j)));
                add_into(&mut col, &sc.class_of(x, &c));
            }
            col
        })
        .collect();
    Comodule::new(coring.clone(), data.sigma.clone(), ExactMatrix::from_columns(sc.dim(), &cols))
}

/// Left coaction `α : Σ* → C ⊗_A Σ*`.
#[derive(Clone, Debug)]
pub struct LeftCoaction {
    pub tensor: TensorProduct,
    pub map: LinearMap,
}

/// A bicomodule `Σ` together with its comatrix data, `can` and `α_{Σ†}`.
#[derive(Clone, Debug)]
pub struct GaloisSetup {
    pub data: ComatrixData,
    pub sigma: Comodule,
    pub can: LinearMap,
    pub morphism: AxiomReport,
    pub alpha: LeftCoaction,
}

impl GaloisSetup {
    pub fn new(sigma: Comodule) -> Result<Self> {
        let data = comatrix_coring(&sigma.carrier)?;
        let can = can_from_coaction(&data, &sigma)?;
        let morphism = check_coring_morphism(&data.coring, &sigma.coring, &can)?;
        if !morphism.passed() {
            let w: Vec<String> = morphism.failures().map(|c| c.name.clone()).collect();
            return Err(Error::Axiom(format!("can is not a coring morphism ({}); invalid bicomodule", w.join(", "))));
        }
        let alpha = left_coaction_on_dual(&data, &sigma.coring, &can)?;
        let report = check_left_coaction(&data, &sigma.coring, &alpha);
        if !report.passed() {
            let w: Vec<String> = report.failures().map(|c| c.name.clone()).collect();
            return Err(Error::Axiom(format!("Σ† fails the left comodule axioms ({})", w.join(", "))));
        }
        Ok(GaloisSetup { data, sigma, can, morphism, alpha })
    }

    pub fn coring(&self) -> &Arc<Coring> {
        &self.sigma.coring
    }

    pub fn b(&self) -> &Arc<Algebra> {
        &self.data.b
    }

    pub fn can_rank(&self) -> usize {
        self.can.rank()
    }

    pub fn is_galois(&self) -> bool {
        crate::linalg::is_isomorphism(&self.can)
    }

    /// Human-readable Galois verdict.
    pub fn galois_verdict(&self) -> Verdict {
        let (r, c) = (self.can.rows(), self.can.cols());
        if self.is_galois() {
            Verdict::new("can", true, format!("can is {r}×{c} invertible"))
        } else {
            Verdict::new("can", false, format!("rank {} of {r}", self.can_rank()))
        }
    }

    /// `L(Y) = Y ⊗_B Σ` with coaction `Y ⊗ ρ_Σ`.
    pub fn induce(&self, y: &Bimodule) -> Result<Comodule> {
        let ys = tensor_over(y, &self.data.sigma)?;
        let y_sc = tensor_over(y, &self.sigma.tensor.module)?;
        let ys_c = tensor_over(&ys.module, &self.coring().carrier)?;
        let id = ExactMatrix::identity(y.dim());
        let coaction = &transport(&y_sc.module, &ys_c.module)? * &tensor_morphism(&ys, &y_sc, &id, &self.sigma.coaction)?;
        Comodule::new(self.coring().clone(), ys.module, coaction)
    }

    /// `f ⊗_B Σ`.
    pub fn induce_map(&self, y: &Bimodule, y2: &Bimodule, f: &LinearMap) -> Result<LinearMap> {
        let src = tensor_over(y, &self.data.sigma)?;
        let dst = tensor_over(y2, &self.data.sigma)?;
        tensor_morphism(&src, &dst, f, &ExactMatrix::identity(self.data.sigma.dim()))
    }
}

/// `α(ψ) = Σ_i can(ψ ⊗ e_i) ⊗ e*_i`.
pub fn left_coaction_on_dual(data: &ComatrixData, coring: &Arc<Coring>, can: &LinearMap) -> Result<LeftCoaction> {
    let tensor = tensor_over(&coring.carrier, &data.dual.module)?;
    let dd = data.dual.module.dim();
    let cols: Vec<Vector> = (0..dd)
        .map(|q| {
            let mut col = zero_vector(tensor.dim());
            for (x, psi) in &data.dual_basis.pairs {
                let c = can.apply(&data.tensor.class_of(&unit_vector(dd, q), x));
                add_into(&mut col, &tensor.class_of(&c, psi));
            }
            col
        })
        .collect();
    let map = ExactMatrix::from_columns(tensor.dim(), &cols);
    Ok(LeftCoaction { tensor, map })
}

/// Left comodule axioms for `α` plus `A`-`B` bilinearity.
pub fn check_left_coaction(data: &ComatrixData, coring: &Arc<Coring>, alpha: &LeftCoaction) -> AxiomReport {
    let mut report = AxiomReport::new("left coaction on Σ†");
    let dual = &data.dual.module;
    let out = &alpha.tensor.module;
    for (name, o, i) in [("α left A-linear", out.left(), dual.left()), ("α right B-linear", out.right(), dual.right())] {
        if let (Some(o), Some(i)) = (o, i) {
            let w = o.matrices.iter().zip(&i.matrices).enumerate().find_map(|(k, (om, im))| {
                differ(&(om * &alpha.map), &(&alpha.map * im)).map(|w| format!("action of e{}: {w}", k + 1))
            });
            report.record(name, w);
        }
    }
    let id_d = ExactMatrix::identity(dual.dim());
    let id_c = ExactMatrix::identity(coring.dim());
    let coassoc = (|| -> Result<Option<String>> {
        let cc_d = tensor_over(&coring.square.module, dual)?;
        let c_cd = tensor_over(&coring.carrier, out)?;
        let lhs = &(&transport(&cc_d.module, &c_cd.module)? * &tensor_morphism(&alpha.tensor, &cc_d, &coring.delta, &id_d)?) * &alpha.map;
        let rhs = &tensor_morphism(&alpha.tensor, &c_cd, &id_c, &alpha.map)? * &alpha.map;
        Ok(differ(&lhs, &rhs))
    })();
    report.record("coassociativity", coassoc.unwrap_or_else(|e| Some(e.to_string())));
    let counit = (|| -> Result<Option<String>> {
        let (t, mult) = left_multiplication_map(dual)?;
        let lhs = &(&mult * &tensor_morphism(&alpha.tensor, &t, &coring.epsilon, &id_d)?) * &alpha.map;
        Ok(differ(&lhs, &id_d))
    })();
    report.record("counit", counit.unwrap_or_else(|e| Some(e.to_string())));
    report
}

/// `X □_C Σ†` as a subspace of `X ⊗_A Σ*`, with its right `B`-action.
#[derive(Clone, Debug)]
pub struct Cotensor {
    pub tensor: TensorProduct,
    pub subspace: SubspacePresentation,
    pub module: Bimodule,
    /// `X ⊗ α − ρ ⊗ Σ*` into `(X ⊗_A C) ⊗_A Σ*`.
    pub difference: LinearMap,
}

impl Cotensor {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn inclusion(&self) -> &ExactMatrix {
        self.subspace.inclusion()
    }
}

pub fn cotensor(setup: &GaloisSetup, x: &Comodule) -> Result<Cotensor> {
    let dual = &setup.data.dual.module;
    let xd = tensor_over(&x.carrier, dual)?;
    let x_cd = tensor_over(&x.carrier, &setup.alpha.tensor.module)?;
    let xc_d = tensor_over(&x.tensor.module, dual)?;
    let x_alpha = &transport(&x_cd.module, &xc_d.module)?
        * &tensor_morphism(&xd, &x_cd, &ExactMatrix::identity(x.dim()), &setup.alpha.map)?;
    let rho_d = tensor_morphism(&xd, &xc_d, &x.coaction, &ExactMatrix::identity(dual.dim()))?;
    let difference = &x_alpha - &rho_d;
    let subspace = kernel_basis(&difference);
    let right = xd.module.right_action()?;
    let mats = right
        .matrices
        .iter()
        .map(|m| {
            subspace
                .factor(&(m * subspace.inclusion()))
                .ok_or_else(|| Error::IllDefined("cotensor is not a B-submodule".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let module = Bimodule::new(subspace.dim(), None, Some(Action::new(right.algebra.clone(), mats)?))?;
    Ok(Cotensor { tensor: xd, subspace, module, difference })
}

/// The evaluation `(X ⊗_A Σ*) ⊗_Q Σ → X`, `x ⊗ ψ ⊗ u ↦ x·ψ(u)`, on quotient
/// coordinates of `X ⊗_A Σ*`.
fn evaluation(setup: &GaloisSetup, x: &Comodule, xd: &TensorProduct) -> Result<LinearMap> {
    let dual = &setup.data.dual;
    let (dd, ds) = (dual.module.dim(), setup.data.sigma.dim());
    let sec = xd.section();
    let mut cols = Vec::with_capacity(xd.dim() * ds);
    for c in 0..xd.dim() {
        let flat = sec.column(c);
        for j in 0..ds {
            let mut col = zero_vector(x.dim());
            for (idx, r) in flat.iter().enumerate().filter(|(_, r)| !num_traits::Zero::is_zero(*r)) {
                let (i, q) = (idx / dd, idx % dd);
                let a = dual.pairing.column(q * ds + j);
                let v = x.carrier.act_right(&a)?.column(i);
                for (o, vi) in col.iter_mut().zip(v) {
                    *o += r * vi;
                }
            }
            cols.push(col);
        }
    }
    Ok(ExactMatrix::from_columns(x.dim(), &cols))
}

/// `η̂_Y : Y → L(Y) □_C Σ†`, `y ↦ y ⊗ e` with `e` the dual-basis element.
#[derive(Clone, Debug)]
pub struct AdjunctionUnit {
    pub induced: Comodule,
    pub cotensor: Cotensor,
    pub map: LinearMap,
}

pub fn adjunction_unit(setup: &GaloisSetup, y: &Bimodule) -> Result<AdjunctionUnit> {
    let ly = setup.induce(y)?;
    let cot = cotensor(setup, &ly)?;
    let ys = tensor_over(y, &setup.data.sigma)?;
    let cols: Vec<Vector> = (0..y.dim())
        .map(|k| {
            let mut col = zero_vector(cot.tensor.dim());
            for (x, psi) in &setup.data.dual_basis.pairs {
                add_into(&mut col, &cot.tensor.class_of(&ys.class_of(&unit_vector(y.dim(), k), x), psi));
            }
            col
        })
        .collect();
    let eta = ExactMatrix::from_columns(cot.tensor.dim(), &cols);
    let map = cot
        .subspace
        .factor(&eta)
        .ok_or_else(|| Error::IllDefined("η_Y does not land in the cotensor product".into()))?;
    Ok(AdjunctionUnit { induced: ly, cotensor: cot, map })
}

/// `ε̂_X : (X □_C Σ†) ⊗_B Σ → X`.
#[derive(Clone, Debug)]
pub struct AdjunctionCounit {
    pub cotensor: Cotensor,
    /// `(X □_C Σ†) ⊗_B Σ`.
    pub tensor: TensorProduct,
    pub map: LinearMap,
}

pub fn adjunction_counit(setup: &GaloisSetup, x: &Comodule) -> Result<AdjunctionCounit> {
    let cot = cotensor(setup, x)?;
    counit_on(setup, x, cot)
}

fn counit_on(setup: &GaloisSetup, x: &Comodule, cot: Cotensor) -> Result<AdjunctionCounit> {
    let ks = tensor_over(&cot.module, &setup.data.sigma)?;
    let eval = evaluation(setup, x, &cot.tensor)?;
    let flat = &eval * &kronecker(cot.inclusion(), &ExactMatrix::identity(setup.data.sigma.dim()));
    if !(&flat * &ks.relations).is_zero() {
        return Err(Error::IllDefined("evaluation is not B-balanced on the cotensor".into()));
    }
    let map = &flat * ks.section();
    Ok(AdjunctionCounit { cotensor: cot, tensor: ks, map })
}

/// `R(f)` for a comodule map `f : X → X′`, restricted to the cotensors.
pub fn cotensor_map(setup: &GaloisSetup, x: &Cotensor, x2: &Cotensor, f: &LinearMap) -> Result<LinearMap> {
    let fd = tensor_morphism(&x.tensor, &x2.tensor, f, &ExactMatrix::identity(setup.data.dual.module.dim()))?;
    x2.subspace
        .factor(&(&fd * x.inclusion()))
        .ok_or_else(|| Error::IllDefined("map does not preserve cotensor products".into()))
}

/// `ε̂_{L(Y)} ∘ L(η̂_Y) = id`.
pub fn triangle_left(setup: &GaloisSetup, y: &Bimodule) -> Result<Option<String>> {
    let unit = adjunction_unit(setup, y)?;
    let counit = counit_on(setup, &unit.induced, unit.cotensor.clone())?;
    let ys = tensor_over(y, &setup.data.sigma)?;
    let l_eta = tensor_morphism(&ys, &counit.tensor, &unit.map, &ExactMatrix::identity(setup.data.sigma.dim()))?;
    Ok(differ(&(&counit.map * &l_eta), &ExactMatrix::identity(ys.dim())))
}

/// `R(ε̂_X) ∘ η̂_{R(X)} = id`.
pub fn triangle_right(setup: &GaloisSetup, x: &Comodule) -> Result<Option<String>> {
    let counit = adjunction_counit(setup, x)?;
    let rx = counit.cotensor.module.clone();
    let unit = adjunction_unit(setup, &rx)?;
    let r_eps = cotensor_map(setup, &unit.cotensor, &counit.cotensor, &counit.map)?;
    Ok(differ(&(&r_eps * &unit.map), &ExactMatrix::identity(rx.dim())))
}

/// `ε̂_X = ν_X ∘ Ψ_X` through the `A`-side equalizer `E_X ⊆ (X ⊗_A Σ*) ⊗_B Σ`.
#[derive(Clone, Debug)]
pub struct PsiNu {
    pub equalizer: SubspacePresentation,
    pub psi: LinearMap,
    pub nu: LinearMap,
    pub counit: LinearMap,
    /// `X ⊗ can` from `(X ⊗_A Σ*) ⊗_B Σ` to `X ⊗_A C`.
    pub phi: LinearMap,
    pub factorization_holds: bool,
    pub psi_iso: bool,
    pub nu_iso: bool,
    pub counit_iso: bool,
    /// `ε̂_X iso ⇔ (Ψ_X iso ∧ ν_X iso)`, evaluated only when `can` is injective.
    pub biconditional: Option<bool>,
}

pub fn psi_nu_factorization(setup: &GaloisSetup, x: &Comodule) -> Result<PsiNu> {
    let counit = adjunction_counit(setup, x)?;
    let cot = &counit.cotensor;
    let sigma = &setup.data.sigma;
    let id_s = ExactMatrix::identity(sigma.dim());
    let xds = tensor_over(&cot.tensor.module, sigma)?;
    let xc_d = tensor_over(&x.tensor.module, &setup.data.dual.module)?;
    let xcds = tensor_over(&xc_d.module, sigma)?;
    let pair = tensor_morphism(&xds, &xcds, &cot.difference, &id_s)?;
    let equalizer = kernel_basis(&pair);
    let l_eq = tensor_morphism(&counit.tensor, &xds, cot.inclusion(), &id_s)?;
    let psi = equalizer
        .factor(&l_eq)
        .ok_or_else(|| Error::IllDefined("L(eq) does not land in the A-side equalizer".into()))?;
    let x_t = tensor_over(&x.carrier, &setup.data.tensor.module)?;
    let phi = &tensor_morphism(&x_t, &x.tensor, &ExactMatrix::identity(x.dim()), &setup.can)?
        * &transport(&xds.module, &x_t.module)?;
    let phi_eq = &phi * equalizer.inclusion();
    let nu = &x.counit_map()? * &phi_eq;
    if &x.coaction * &nu != phi_eq {
        return Err(Error::IllDefined("φ_X ∘ eq′ does not factor through ρ_X".into()));
    }
    let factorization_holds = &nu * &psi == counit.map;
    let psi_iso = crate::linalg::is_isomorphism(&psi);
    let nu_iso = crate::linalg::is_isomorphism(&nu);
    let counit_iso = crate::linalg::is_isomorphism(&counit.map);
    let biconditional = setup.can.is_injective().then_some(counit_iso == (psi_iso && nu_iso));
    Ok(PsiNu { equalizer, psi, nu, counit: counit.map, phi, factorization_holds, psi_iso, nu_iso, counit_iso, biconditional })
}

/// The split fork `X → X ⊗ C ⇉ X ⊗ C ⊗ C` with splittings `ε_X` and `ε_{X⊗C}`.
pub fn contractible_equalizer_check(x: &Comodule) -> Result<AxiomReport> {
    let c = &x.coring;
    let mut report = AxiomReport::new("contractible equalizer");
    let (x_cc, xc_c, t) = x.cubes()?;
    let id_x = ExactMatrix::identity(x.dim());
    let id_c = ExactMatrix::identity(c.dim());
    let x_delta = &t * &tensor_morphism(&x.tensor, &x_cc, &id_x, &c.delta)?;
    let rho_c = tensor_morphism(&x.tensor, &xc_c, &x.coaction, &id_c)?;
    let eps_x = x.counit_map()?;
    let (m, mult) = multiplication_map(&x.tensor.module)?;
    let eps_gx = &mult * &tensor_morphism(&xc_c, &m, &ExactMatrix::identity(x.tensor.dim()), &c.epsilon)?;
    report.record("fork", differ(&(&rho_c * &x.coaction), &(&x_delta * &x.coaction)));
    report.record("ε ∘ ρ = id", differ(&(&eps_x * &x.coaction), &id_x));
    report.record("Gε ∘ Δ = id", differ(&(&eps_gx * &x_delta), &ExactMatrix::identity(x.tensor.dim())));
    report.record("Gε ∘ Gρ = ρ ∘ ε", differ(&(&eps_gx * &rho_c), &(&x.coaction * &eps_x)));
    Ok(report)
}

/// `D_φC ≅ Σ†` via `θ = α` corestricted to `C □_C Σ†`, and `ε̂_C ∘ (θ ⊗ Σ) = can`.
pub fn cofree_identification(setup: &GaloisSetup) -> Result<AxiomReport> {
    let cofree = Comodule::cofree(setup.coring().clone())?;
    let counit = adjunction_counit(setup, &cofree)?;
    let mut report = AxiomReport::new("D_φC ≅ Σ†");
    let theta = counit.cotensor.subspace.factor(&setup.alpha.map);
    let Some(theta) = theta else {
        report.fail("α lands in the cotensor", "α(Σ†) ⊄ C □ Σ†");
        return Ok(report);
    };
    report.pass("α lands in the cotensor");
    report.record(
        "θ iso",
        (!crate::linalg::is_isomorphism(&theta)).then(|| format!("θ is {}x{} of rank {}", theta.rows(), theta.cols(), theta.rank())),
    );
    let theta_s = tensor_morphism(&setup.data.tensor, &counit.tensor, &theta, &ExactMatrix::identity(setup.data.sigma.dim()))?;
    report.record("ε̂_C ∘ (θ ⊗ Σ) = can", differ(&(&counit.map * &theta_s), &setup.can));
    Ok(report)
}

/// `Ψ_X` is an isomorphism, i.e. `− ⊗_B Σ` preserves the defining equalizer of `X □_C Σ†`.
pub fn preserves_equalizer(setup: &GaloisSetup, x: &Comodule) -> Result<bool> {
    Ok(psi_nu_factorization(setup, x)?.psi_iso)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub subject: String,
    pub holds: bool,
    pub detail: String,
}

impl Verdict {
    pub fn new(subject: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        Verdict { subject: subject.into(), holds, detail: detail.into() }
    }
}

fn iso_detail(m: &LinearMap) -> String {
    format!("{}x{}, rank {}", m.rows(), m.cols(), m.rank())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagnosticsReport {
    pub galois: Verdict,
    pub counit_iso: Vec<Verdict>,
    pub unit_iso: Vec<Verdict>,
    pub preserves_equalizers: Vec<Verdict>,
    pub reflects_iso_samples: Vec<Verdict>,
    pub structural: Vec<Verdict>,
    pub theorem_consistency: Vec<Verdict>,
    /// No comodules were supplied, so only the `can` verdict carries information.
    pub vacuous: bool,
    pub fully_faithful: bool,
    pub equivalence: Option<bool>,
}

impl DiagnosticsReport {
    pub fn consistent(&self) -> bool {
        self.theorem_consistency.iter().all(|v| v.holds)
    }

    pub fn all_green(&self) -> bool {
        self.galois.holds
            && [&self.counit_iso, &self.unit_iso, &self.preserves_equalizers, &self.reflects_iso_samples, &self.structural]
                .iter()
                .all(|vs| vs.iter().all(|v| v.holds))
            && self.consistent()
    }
}

fn is_cofree(x: &Comodule) -> bool {
    x.carrier == x.coring.carrier && x.coaction == x.coring.delta
}

/// Evaluates (a) `can` iso, (b) `ε̂_X` iso and (c) equalizer preservation on
/// the supplied comodules and checks the fully-faithfulness theorem on them.
pub fn faithful_full_report(setup: &GaloisSetup, comodules: &[(String, Comodule)]) -> Result<DiagnosticsReport> {
    let galois = setup.galois_verdict();
    let a = galois.holds;
    let mut counit_iso = Vec::new();
    let mut preserves = Vec::new();
    let mut structural = Vec::new();
    let mut consistency = Vec::new();
    let mut cofree_seen = false;
    for (name, x) in comodules {
        cofree_seen |= is_cofree(x);
        let pn = psi_nu_factorization(setup, x)?;
        counit_iso.push(Verdict::new(name, pn.counit_iso, iso_detail(&pn.counit)));
        preserves.push(Verdict::new(name, pn.psi_iso, format!("Ψ {}", iso_detail(&pn.psi))));
        structural.push(Verdict::new(format!("{name}: ε̂ = ν ∘ Ψ"), pn.factorization_holds, ""));
        let contr = contractible_equalizer_check(x)?;
        structural.push(Verdict::new(format!("{name}: contractible equalizer"), contr.passed(), failures(&contr)));
        let tri = triangle_right(setup, x)?;
        structural.push(Verdict::new(format!("{name}: R(ε̂) ∘ η̂_R = id"), tri.is_none(), tri.unwrap_or_default()));
        if let Some(holds) = pn.biconditional {
            consistency.push(Verdict::new(
                format!("{name}: ε̂ iso ⇔ (Ψ iso ∧ ν iso)"),
                holds,
                format!("ε̂ {}, Ψ {}, ν {}", pn.counit_iso, pn.psi_iso, pn.nu_iso),
            ));
        }
    }
    let all_b = counit_iso.iter().all(|v| v.holds);
    let all_c = preserves.iter().all(|v| v.holds);
    let vacuous = comodules.is_empty();
    if !vacuous {
        if cofree_seen {
            consistency.push(Verdict::new(
                "fully faithful: (can iso ∧ all Ψ iso) ⇔ all ε̂ iso",
                (a && all_c) == all_b,
                format!("can {a}, Ψ {all_c}, ε̂ {all_b}"),
            ));
        } else {
            let holds = counit_iso.iter().zip(&preserves).all(|(b, c)| !(a && c.holds) || b.holds);
            consistency.push(Verdict::new(
                "fully faithful: (can iso ∧ Ψ_X iso) ⇒ ε̂_X iso (cofree comodule not sampled)",
                holds,
                format!("can {a}, Ψ {all_c}, ε̂ {all_b}"),
            ));
        }
    }
    let ident = cofree_identification(setup)?;
    structural.push(Verdict::new("D_φC ≅ Σ†", ident.passed(), failures(&ident)));
    Ok(DiagnosticsReport {
        galois,
        counit_iso,
        unit_iso: Vec::new(),
        preserves_equalizers: preserves,
        reflects_iso_samples: Vec::new(),
        structural,
        theorem_consistency: consistency,
        vacuous,
        fully_faithful: a && all_b && all_c,
        equivalence: None,
    })
}

fn failures(r: &AxiomReport) -> String {
    r.failures()
        .map(|c| match &c.witness {
            Some(w) => format!("{}: {w}", c.name),
            None => c.name.clone(),
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// A sample `f : Y → Y′` of right `B`-modules.
#[derive(Clone, Debug)]
pub struct MorphismSample {
    pub name: String,
    pub source: Bimodule,
    pub target: Bimodule,
    pub map: LinearMap,
}

/// [`faithful_full_report`] plus (d) `η̂_Y` iso and (e) reflection of isomorphisms on samples.
pub fn equivalence_report(
    setup: &GaloisSetup,
    comodules: &[(String, Comodule)],
    bmodules: &[(String, Bimodule)],
    morphisms: &[MorphismSample],
) -> Result<DiagnosticsReport> {
    let mut report = faithful_full_report(setup, comodules)?;
    for (name, y) in bmodules {
        let unit = adjunction_unit(setup, y)?;
        report.unit_iso.push(Verdict::new(name, crate::linalg::is_isomorphism(&unit.map), iso_detail(&unit.map)));
        let tri = triangle_left(setup, y)?;
        report.structural.push(Verdict::new(format!("{name}: ε̂_L ∘ L(η̂) = id"), tri.is_none(), tri.unwrap_or_default()));
    }
    for m in morphisms {
        let lf = setup.induce_map(&m.source, &m.target, &m.map)?;
        let lf_iso = crate::linalg::is_isomorphism(&lf);
        let f_iso = crate::linalg::is_isomorphism(&m.map);
        report.reflects_iso_samples.push(Verdict::new(
            &m.name,
            !lf_iso || f_iso,
            format!("f⊗Σ iso {lf_iso}, f iso {f_iso}"),
        ));
        // With both units invertible, f = η̂′⁻¹ ∘ R(f ⊗ Σ) ∘ η̂, so f⊗Σ iso forces f iso.
        let units = [&m.source, &m.target]
            .into_iter()
            .map(|y| adjunction_unit(setup, y).map(|u| crate::linalg::is_isomorphism(&u.map)))
            .collect::<Result<Vec<_>>>()?;
        if units.iter().all(|&u| u) {
            report.theorem_consistency.push(Verdict::new(
                format!("{}: units iso ∧ f⊗Σ iso ⇒ f iso", m.name),
                !lf_iso || f_iso,
                "",
            ));
        }
    }
    let all_d = report.unit_iso.iter().all(|v| v.holds);
    let all_e = report.reflects_iso_samples.iter().all(|v| v.holds);
    report.equivalence = Some(report.fully_faithful && all_d && all_e);
    Ok(report)
}

/// Axiom report of the comatrix coring, the canonical map and `Σ†`.
pub fn check_galois_setup(setup: &GaloisSetup) -> AxiomReport {
    let mut report = AxiomReport::new("Galois setup");
    report.merge(check_coring(&setup.data.coring));
    report.merge(setup.morphism.clone());
    report.merge(check_left_coaction(&setup.data, setup.coring(), &setup.alpha));
    report
}
