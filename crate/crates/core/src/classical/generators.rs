use std::sync::Arc;

use serde::Serialize;

use super::{Family, GroupSpec, Matrix};
use crate::error::{Error, Result};
use crate::ff::{poly, Gf, GF_TABLE_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    None,
    Alternating,
    Hermitian,
    Quadratic,
}

/// Generating matrices of the quasisimple matrix group together with the
/// form it preserves.
///
/// Basis vectors `i` and `n-1-i` form hyperbolic pairs. The alternating
/// form has `+1` on the upper half of the antidiagonal and `-1` below, the
/// hermitian form is the antidiagonal identity, and quadratic forms are
/// `Σ x_i x_{n-1-i}` plus `x_m²` in odd dimension or the anisotropic
/// `x_{m-1}² + x_{m-1}x_m + ν x_m²` in the minus type.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    spec: GroupSpec,
    gf: Arc<Gf>,
    generators: Vec<Matrix>,
    gram: Option<Matrix>,
    quadratic: Option<Matrix>,
    form_kind: FormKind,
}

impl MatrixRep {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn field(&self) -> &Arc<Gf> {
        &self.gf
    }

    pub fn n(&self) -> usize {
        self.spec.n() as usize
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    /// Gram matrix of the bilinear or sesquilinear form; for quadratic
    /// forms this is the polar form.
    pub fn gram(&self) -> Option<&Matrix> {
        self.gram.as_ref()
    }

    /// Upper-triangular matrix `U` with `Q(v) = Σ_{i≤j} U_ij v_i v_j`.
    pub fn quadratic(&self) -> Option<&Matrix> {
        self.quadratic.as_ref()
    }

    pub fn form_kind(&self) -> FormKind {
        self.form_kind
    }

    fn conj(&self, a: u32) -> u32 {
        conj(&self.gf, &self.spec, a)
    }

    /// `u J v̄ᵀ`, with the bar only in the unitary case.
    pub fn form_value(&self, u: &[u32], v: &[u32]) -> u32 {
        let Some(j) = &self.gram else { return 0 };
        bilinear(
            &self.gf,
            j,
            u,
            &v.iter().map(|&x| self.conj(x)).collect::<Vec<_>>(),
        )
    }

    pub fn quadratic_value(&self, v: &[u32]) -> u32 {
        match &self.quadratic {
            Some(u) => quadratic_value(&self.gf, u, v),
            None => 0,
        }
    }

    /// Whether `m` preserves the form (and the quadratic form, when there
    /// is one). Every matrix preserves the absent form of the linear groups.
    pub fn preserves_form(&self, m: &Matrix) -> bool {
        let Some(j) = &self.gram else { return true };
        let gf = &self.gf;
        let bar = m.transpose().map(|x| self.conj(x));
        if m.mul(j, gf).mul(&bar, gf) != *j {
            return false;
        }
        if let Some(u) = &self.quadratic {
            for i in 0..self.n() {
                let mut e = vec![0u32; self.n()];
                e[i] = 1;
                if quadratic_value(gf, u, m.row(i)) != quadratic_value(gf, u, &e) {
                    return false;
                }
            }
        }
        true
    }

    /// For the linear groups, an element of order `r` in a Singer cycle:
    /// multiplication by an order-`r` element of `GF(q^n)`, written over
    /// `GF(q)` in the basis `1, t, …, t^{n-1}`.
    pub fn singer_element(&self, r: u128) -> Result<Matrix> {
        if self.spec.family() != Family::Psl {
            return Err(Error::InvalidInput(
                "Singer elements are only built for the linear groups".into(),
            ));
        }
        let gf = &*self.gf;
        let n = self.n();
        let q = gf.q() as u128;
        let qn = crate::numthy::checked_pow(q, n as u32)?;
        if (qn - 1) % r != 0 {
            return Err(Error::InvalidInput(format!("{r} does not divide q^n - 1")));
        }
        let modulus = poly::find_irreducible(gf, n);
        let exp = (qn - 1) / r;
        let w = (1..qn)
            .find_map(|idx| {
                let mut z = Vec::with_capacity(n);
                let mut rest = idx;
                for _ in 0..n {
                    z.push((rest % q) as u32);
                    rest /= q;
                }
                poly::trim(gf, &mut z);
                let y = poly::pow_mod(gf, &z, exp, &modulus);
                (y != [1]).then_some(y)
            })
            .ok_or_else(|| Error::InvalidInput(format!("no element of order {r}")))?;
        let mut rows = Vec::with_capacity(n);
        let mut basis: Vec<u32> = vec![1];
        for _ in 0..n {
            let mut img = poly::mul_mod(gf, &basis, &w, &modulus);
            img.resize(n, 0);
            rows.push(img);
            basis = poly::mul_mod(gf, &basis, &[0, 1], &modulus);
        }
        Ok(Matrix::from_rows(&rows))
    }
}

fn conj(gf: &Gf, spec: &GroupSpec, a: u32) -> u32 {
    if spec.family() == Family::Psu {
        gf.pow(a, spec.q())
    } else {
        a
    }
}

fn bilinear(gf: &Gf, j: &Matrix, u: &[u32], v: &[u32]) -> u32 {
    let uj = j.apply(u, gf);
    uj.iter()
        .zip(v)
        .fold(0, |acc, (&a, &b)| gf.add(acc, gf.mul(a, b)))
}

fn quadratic_value(gf: &Gf, u: &Matrix, v: &[u32]) -> u32 {
    let n = v.len();
    let mut acc = 0;
    for i in 0..n {
        if v[i] == 0 {
            continue;
        }
        for j in i..n {
            let c = u.get(i, j);
            if c != 0 && v[j] != 0 {
                acc = gf.add(acc, gf.mul(c, gf.mul(v[i], v[j])));
            }
        }
    }
    acc
}

/// Standard generators: root elements for the positive and negative
/// simple roots, one for each element of an additive basis of the
/// relevant field. These generate the quasisimple group (SL, SU, Sp or Ω).
pub fn standard_generators(spec: &GroupSpec) -> Result<MatrixRep> {
    let (n, field_size) = spec.natural_module();
    if field_size as u128 > GF_TABLE_CAP {
        return Err(Error::CapExceeded {
            what: "field size",
            value: field_size as u128,
            cap: GF_TABLE_CAP,
        });
    }
    let n = n as usize;
    let family = spec.family();
    let degree = if family == Family::Psu {
        2 * spec.f()
    } else {
        spec.f()
    };
    let gf = Arc::new(Gf::new(spec.p(), degree)?);
    let g = &*gf;
    let one = 1u32;
    let minus_one = g.neg(1);
    let partner = |i: usize| n - 1 - i;

    let (gram, quadratic, form_kind) = match family {
        Family::Psl => (None, None, FormKind::None),
        Family::Psp => {
            let mut j = Matrix::zero(n);
            for i in 0..n {
                j.set(i, partner(i), if i < n / 2 { one } else { minus_one });
            }
            (Some(j), None, FormKind::Alternating)
        }
        Family::Psu => {
            let mut j = Matrix::zero(n);
            for i in 0..n {
                j.set(i, partner(i), one);
            }
            (Some(j), None, FormKind::Hermitian)
        }
        Family::POmega | Family::POmegaPlus | Family::POmegaMinus => {
            let mut u = Matrix::zero(n);
            let m = n / 2;
            let hyperbolic = if family == Family::POmegaMinus {
                m - 1
            } else {
                m
            };
            for i in 0..hyperbolic {
                u.set(i, partner(i), one);
            }
            match family {
                Family::POmega => u.set(m, m, one),
                Family::POmegaMinus => {
                    let nu = (0..g.q())
                        .find(|&nu| g.elements().all(|x| g.add(g.add(g.mul(x, x), x), nu) != 0))
                        .expect("an irreducible quadratic exists");
                    u.set(m - 1, m - 1, one);
                    u.set(m - 1, m, one);
                    u.set(m, m, nu);
                }
                _ => {}
            }
            let mut polar = Matrix::zero(n);
            for i in 0..n {
                for k in 0..n {
                    polar.set(i, k, g.add(u.get(i, k), u.get(k, i)));
                }
            }
            (Some(polar), Some(u), FormKind::Quadratic)
        }
    };

    let mut rep = MatrixRep {
        spec: *spec,
        gf: gf.clone(),
        generators: Vec::new(),
        gram,
        quadratic,
        form_kind,
    };

    let basis: Vec<u32> = (0..degree as u64).map(|k| g.exp(k)).collect();
    let q0 = spec.q();
    let trace = |a: u32| g.add(a, rep_conj(g, spec, a));
    let trace_zero_basis = || -> Vec<u32> {
        let eps = (1..g.q())
            .find(|&a| trace(a) == 0)
            .expect("trace map has a kernel");
        (0..spec.f() as u64)
            .map(|k| g.mul(eps, g.exp(k * (q0 + 1))))
            .collect()
    };

    let mut gens = Vec::new();
    let elementary = |i: usize, j: usize, a: u32| {
        let mut m = Matrix::identity(n);
        m.set(i, j, a);
        m
    };
    // I + a E_ij + c E_j'i' with c fixed by the form
    let two_entry = |i: usize, j: usize, a: u32| {
        let mut m = elementary(i, j, a);
        if let Some(jm) = &rep.gram {
            let (ip, jp) = (partner(i), partner(j));
            let ratio = g.mul(jm.get(j, jp), g.inv(jm.get(i, ip)).expect("nondegenerate"));
            let c = g.neg(g.mul(rep_conj(g, spec, a), ratio));
            m.set(jp, ip, c);
        }
        m
    };
    let siegel = |u_idx: usize, v: &[u32]| -> Matrix {
        let polar = rep.gram.as_ref().expect("orthogonal form");
        let quad = rep.quadratic.as_ref().expect("quadratic form");
        let qv = quadratic_value(g, quad, v);
        let mut rows = Vec::with_capacity(n);
        for k in 0..n {
            let mut e = vec![0u32; n];
            e[k] = 1;
            let bu = polar.get(k, u_idx);
            let bv = bilinear(g, polar, &e, v);
            let mut img = e;
            for (t, &vt) in v.iter().enumerate() {
                img[t] = g.add(img[t], g.mul(bu, vt));
            }
            let coeff = g.add(bv, g.mul(qv, bu));
            img[u_idx] = g.sub(img[u_idx], coeff);
            rows.push(img);
        }
        Matrix::from_rows(&rows)
    };

    match family {
        Family::Psl => {
            for k in 0..n - 1 {
                for &a in &basis {
                    gens.push(elementary(k, k + 1, a));
                    gens.push(elementary(k + 1, k, a));
                }
            }
        }
        Family::Psp => {
            let m = n / 2;
            for k in 0..m - 1 {
                for &a in &basis {
                    gens.push(two_entry(k, k + 1, a));
                    gens.push(two_entry(k + 1, k, a));
                }
            }
            for &a in &basis {
                gens.push(elementary(m - 1, m, a));
                gens.push(elementary(m, m - 1, a));
            }
        }
        Family::Psu => {
            let m = n / 2;
            for k in 0..m.saturating_sub(1) {
                for &a in &basis {
                    gens.push(two_entry(k, k + 1, a));
                    gens.push(two_entry(k + 1, k, a));
                }
            }
            let tz = trace_zero_basis();
            if n.is_multiple_of(2) {
                for &a in &tz {
                    gens.push(elementary(m - 1, m, a));
                    gens.push(elementary(m, m - 1, a));
                }
            } else {
                let mid = m;
                let middle_root = |i: usize, a: u32, d: u32| {
                    let mut mat = Matrix::identity(n);
                    mat.set(i, mid, a);
                    mat.set(i, partner(i), d);
                    mat.set(mid, partner(i), g.neg(rep_conj(g, spec, a)));
                    mat
                };
                for i in [m - 1, m + 1] {
                    for &a in &basis {
                        let target = g.neg(g.mul(a, rep_conj(g, spec, a)));
                        let d = (0..g.q())
                            .find(|&d| trace(d) == target)
                            .expect("trace is surjective");
                        gens.push(middle_root(i, a, d));
                    }
                    for &d in &tz {
                        gens.push(middle_root(i, 0, d));
                    }
                }
            }
        }
        Family::POmega => {
            let m = n / 2;
            for k in 0..m.saturating_sub(1) {
                for &a in &basis {
                    gens.push(two_entry(k, k + 1, a));
                    gens.push(two_entry(k + 1, k, a));
                }
            }
            for u_idx in [m + 1, m - 1] {
                for &a in &basis {
                    let mut v = vec![0u32; n];
                    v[m] = a;
                    gens.push(siegel(u_idx, &v));
                }
            }
        }
        Family::POmegaPlus => {
            let m = n / 2;
            for k in 0..m - 1 {
                for &a in &basis {
                    gens.push(two_entry(k, k + 1, a));
                    gens.push(two_entry(k + 1, k, a));
                }
            }
            for &a in &basis {
                gens.push(two_entry(m - 2, m, a));
                gens.push(two_entry(m, m - 2, a));
            }
        }
        Family::POmegaMinus => {
            let m = n / 2;
            for k in 0..m.saturating_sub(2) {
                for &a in &basis {
                    gens.push(two_entry(k, k + 1, a));
                    gens.push(two_entry(k + 1, k, a));
                }
            }
            for u_idx in [m + 1, m - 2] {
                for mid in [m - 1, m] {
                    for &a in &basis {
                        let mut v = vec![0u32; n];
                        v[mid] = a;
                        gens.push(siegel(u_idx, &v));
                    }
                }
            }
        }
    }
    rep.generators = gens;
    Ok(rep)
}

fn rep_conj(gf: &Gf, spec: &GroupSpec, a: u32) -> u32 {
    conj(gf, spec, a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn specs() -> Vec<GroupSpec> {
        let mut v = Vec::new();
        for &(f, n, q) in &[
            (Family::Psl, 2, 7),
            (Family::Psl, 3, 4),
            (Family::Psl, 4, 3),
            (Family::Psu, 3, 3),
            (Family::Psu, 4, 2),
            (Family::Psu, 5, 4),
            (Family::Psp, 4, 3),
            (Family::Psp, 6, 4),
            (Family::POmega, 7, 3),
            (Family::POmegaPlus, 8, 2),
            (Family::POmegaPlus, 8, 3),
            (Family::POmegaMinus, 8, 2),
            (Family::POmegaMinus, 10, 5),
        ] {
            v.push(GroupSpec::new(f, n, q).unwrap());
        }
        for &(f, n, q) in &[
            (Family::POmega, 5, 3),
            (Family::POmegaMinus, 4, 2),
            (Family::POmegaMinus, 4, 3),
            (Family::POmegaPlus, 6, 2),
        ] {
            v.push(GroupSpec::unchecked(f, n, q).unwrap());
        }
        v
    }

    #[test]
    fn generators_preserve_forms_and_have_determinant_one() {
        for spec in specs() {
            let rep = standard_generators(&spec).unwrap();
            assert!(!rep.generators().is_empty());
            for m in rep.generators() {
                assert!(rep.preserves_form(m), "{spec}: {:?}", m.rows());
                assert_eq!(m.determinant(rep.field()), 1, "{spec}");
                assert!(!m.is_scalar(), "{spec}");
            }
        }
    }

    #[test]
    fn forms_are_nondegenerate() {
        for spec in specs() {
            let rep = standard_generators(&spec).unwrap();
            if let Some(j) = rep.gram() {
                if spec.p() != 2 || spec.family() != Family::POmega {
                    assert_ne!(j.determinant(rep.field()), 0, "{spec}");
                }
            }
        }
    }

    #[test]
    fn singer_elements_have_the_right_order() {
        let spec = GroupSpec::new(Family::Psl, 3, 3).unwrap();
        let rep = standard_generators(&spec).unwrap();
        let gf = rep.field();
        let x = rep.singer_element(13).unwrap();
        assert_eq!(x.determinant(gf), 1);
        let mut p = Matrix::identity(3);
        for k in 1..=13 {
            p = p.mul(&x, gf);
            assert_eq!(p == Matrix::identity(3), k == 13);
        }
    }
}
