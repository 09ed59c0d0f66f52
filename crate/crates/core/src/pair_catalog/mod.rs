//! The classification data: appendix cases, table lines, and their quotients.

pub mod actions;
pub mod charts;
pub mod ids;
pub mod models;
pub mod quotient;

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group_actions::{ActionElement, GroupElement};
use crate::linalg;
use crate::ring::Ring;
use crate::tolerances::SUBSPACE_INVARIANCE;

pub use ids::{CaseId, CaseKind};
pub use quotient::{get_quotient, QuotientDescriptor, QuotientEntry};

#[derive(Clone, Debug)]
pub struct CaseDescriptor {
    pub id: CaseId,
    pub dim_v: usize,
    pub dim_z: usize,
    pub generators: Vec<ActionElement>,
    pub discrete: Vec<GroupElement>,
    pub bidegrees: Vec<(u32, u32)>,
    pub labels: Vec<String>,
    /// 1, 2 or 3 for table lines.
    pub block: Option<u8>,
    /// Orthonormal frame of the retained centre after a central reduction,
    /// in the parent's 𝔷 coordinates.
    z_frame: Option<DMatrix<f64>>,
}

pub fn block_of(kind: CaseKind) -> Option<u8> {
    match kind.line()? {
        1..=3 => Some(1),
        4..=9 => Some(2),
        _ => Some(3),
    }
}

pub fn get_case(id: CaseId) -> Result<CaseDescriptor> {
    let id = CaseId::new(id.kind, id.n)?;
    let n = id.n();
    let (dim_v, dim_z) = models::dims(id.kind, n);
    let generators = actions::lie_basis(id.kind, n)?;
    Ok(CaseDescriptor {
        id,
        dim_v,
        dim_z,
        generators,
        discrete: actions::discrete_elements(id.kind, n),
        bidegrees: models::bidegrees(id.kind, n),
        labels: models::labels(id.kind, n),
        block: block_of(id.kind),
        z_frame: None,
    })
}

impl CaseDescriptor {
    pub fn kind(&self) -> CaseKind {
        self.id.kind
    }

    pub fn n(&self) -> usize {
        self.id.n()
    }

    /// Number of Hilbert-basis entries.
    pub fn d(&self) -> usize {
        self.bidegrees.len()
    }

    pub fn is_reduced(&self) -> bool {
        self.z_frame.is_some()
    }

    pub fn has_bracket(&self) -> bool {
        models::has_bracket(self.kind())
    }

    fn check_dims<R>(&self, v: &[R], z: &[R]) -> Result<()> {
        if v.len() != self.dim_v || z.len() != self.dim_z {
            return Err(Error::Dimension(format!(
                "{}: expected ({}, {}), got ({}, {})",
                self.id,
                self.dim_v,
                self.dim_z,
                v.len(),
                z.len()
            )));
        }
        Ok(())
    }

    /// ρ(v, z) in catalog order.
    pub fn hilbert<R: Ring>(&self, v: &[R], z: &[R]) -> Result<Vec<R>> {
        self.check_dims(v, z)?;
        if self.is_reduced() {
            return Ok(Vec::new());
        }
        Ok(models::hilbert(self.kind(), self.n(), v, z))
    }

    pub fn bracket<R: Ring>(&self, v: &[R], u: &[R]) -> Result<Vec<R>> {
        if v.len() != self.dim_v || u.len() != self.dim_v {
            return Err(Error::Dimension(format!("{}: bracket arguments must have length {}", self.id, self.dim_v)));
        }
        let full = models::bracket(self.kind(), self.n(), v, u).ok_or_else(|| Error::NoBracket(self.id.to_string()))?;
        Ok(match &self.z_frame {
            None => full,
            Some(p) => (0..p.ncols())
                .map(|c| {
                    full.iter()
                        .enumerate()
                        .fold(R::zero(), |acc, (r, x)| acc + R::from_f64(p[(r, c)]) * x.clone())
                })
                .collect(),
        })
    }

    /// S_l[i][j] = ⟨[e_i, e_j], ε_l⟩.
    pub fn structure_constants<R: Ring>(&self) -> Result<Vec<Vec<Vec<R>>>> {
        let unit = |k: usize| -> Vec<R> { (0..self.dim_v).map(|i| if i == k { R::one() } else { R::zero() }).collect() };
        let mut out = vec![vec![vec![R::zero(); self.dim_v]; self.dim_v]; self.dim_z];
        for i in 0..self.dim_v {
            for j in i + 1..self.dim_v {
                let b = self.bracket(&unit(i), &unit(j))?;
                for (l, x) in b.into_iter().enumerate() {
                    out[l][j][i] = -x.clone();
                    out[l][i][j] = x;
                }
            }
        }
        Ok(out)
    }

    /// J_z with ⟨J_z v, v′⟩ = ⟨z, [v, v′]⟩.
    pub fn j_map(&self, z: &[f64]) -> Result<DMatrix<f64>> {
        let s = self.structure_constants::<f64>()?;
        Ok(j_from_structure(&s, z))
    }

    /// Rank of {[e_i, e_j]} inside 𝔷.
    pub fn bracket_image_rank(&self) -> Result<usize> {
        let s = self.structure_constants::<f64>()?;
        let cols = self.dim_v * self.dim_v;
        let m = DMatrix::from_fn(self.dim_z, cols, |l, k| s[l][k / self.dim_v][k % self.dim_v]);
        Ok(linalg::rank(&m, crate::tolerances::RANK_REL_TOL))
    }

    /// dim span{a_z ζ} over the generators.
    pub fn orbit_dim(&self, zeta: &[f64]) -> usize {
        let zv = DVector::from_column_slice(zeta);
        if self.generators.is_empty() || zv.amax() == 0.0 {
            return 0;
        }
        let cols: Vec<DVector<f64>> = self.generators.iter().map(|g| &g.a_z * &zv).collect();
        linalg::rank(&DMatrix::from_columns(&cols), crate::tolerances::RANK_REL_TOL)
    }

    /// Quotient of 𝔷 by the span of the columns of `sub` (any spanning set).
    pub fn central_reduction(&self, sub: &DMatrix<f64>) -> Result<CaseDescriptor> {
        if sub.nrows() != self.dim_z {
            return Err(Error::Dimension(format!("subspace rows {} vs dim 𝔷 {}", sub.nrows(), self.dim_z)));
        }
        let q = if sub.ncols() == 0 { DMatrix::zeros(self.dim_z, 0) } else { linalg::column_space(sub) };
        if q.ncols() == 0 {
            return Ok(self.clone());
        }
        if q.ncols() >= self.dim_z {
            return Err(Error::Precondition("reduction by all of 𝔷 leaves an abelian quotient".into()));
        }
        let proj = DMatrix::identity(self.dim_z, self.dim_z) - &q * q.transpose();
        let worst = self.generators.iter().map(|g| (&proj * &g.a_z * &q).amax()).fold(0.0, f64::max);
        if worst > SUBSPACE_INVARIANCE {
            return Err(Error::NotInvariant(worst));
        }
        let p = linalg::null_space(&q.transpose())?;
        let generators = self
            .generators
            .iter()
            .map(|g| ActionElement { a_v: g.a_v.clone(), a_z: p.transpose() * &g.a_z * &p })
            .collect();
        let discrete = self
            .discrete
            .iter()
            .map(|g| GroupElement { g_v: g.g_v.clone(), g_z: p.transpose() * &g.g_z * &p })
            .collect();
        let frame = match &self.z_frame {
            None => p.clone(),
            Some(f) => f * &p,
        };
        Ok(CaseDescriptor {
            id: self.id,
            dim_v: self.dim_v,
            dim_z: p.ncols(),
            generators,
            discrete,
            bidegrees: Vec::new(),
            labels: Vec::new(),
            block: self.block,
            z_frame: Some(frame),
        })
    }
}

pub fn j_from_structure(s: &[Vec<Vec<f64>>], z: &[f64]) -> DMatrix<f64> {
    let dv = s.first().map_or(0, |m| m.len());
    DMatrix::from_fn(dv, dv, |i, j| s.iter().zip(z).map(|(sl, zl)| zl * sl[j][i]).sum())
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogRow {
    pub id: String,
    pub line: Option<u8>,
    pub appendix: Option<u8>,
    pub dim_v: usize,
    pub dim_z: usize,
    pub d: usize,
    pub bidegrees: Vec<(u32, u32)>,
    pub block: Option<u8>,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientRow {
    pub line: u8,
    pub zeta0: Vec<f64>,
    pub v_split: Option<(usize, usize)>,
    pub rho_prime_v: Vec<String>,
    pub radical: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Catalog {
    pub schema: &'static str,
    pub cases: Vec<CatalogRow>,
    pub quotients: Vec<QuotientRow>,
}

pub fn catalog_rows(ids: &[CaseId]) -> Result<Vec<CatalogRow>> {
    ids.iter()
        .map(|&id| {
            let n = CaseId::new(id.kind, id.n)?.n();
            let (dim_v, dim_z) = models::dims(id.kind, n);
            let bidegrees = models::bidegrees(id.kind, n);
            Ok(CatalogRow {
                id: id.to_string(),
                line: id.kind.line(),
                appendix: id.kind.appendix_number(),
                dim_v, dim_z, d: bidegrees.len(), bidegrees, block: block_of(id.kind) })
        })
        .collect()
}

pub fn catalog() -> Result<Catalog> {
    let quotients = (1..=12)
        .map(|l| {
            let q = get_quotient(l)?;
            Ok(QuotientRow {
                line: l,
                zeta0: q.zeta0.clone(),
                v_split: q.v_split,
                rho_prime_v: q.rho_prime_v_labels(),
                radical: q.radical,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Catalog { schema: "nilpair-catalog/1", cases: catalog_rows(&CaseId::default_suite())?, quotients })
}

impl Catalog {
    pub fn table_lines(&self) -> std::collections::BTreeSet<u8> {
        self.cases.iter().filter_map(|r| r.line).collect()
    }

    pub fn appendix_numbers(&self) -> std::collections::BTreeSet<u8> {
        self.cases.iter().filter_map(|r| r.appendix).collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("{:<16} {:>5} {:>5} {:>3} {:>5}  bidegrees\n", "case", "dim v", "dim z", "d", "block"));
        for r in &self.cases {
            let bd: Vec<String> = r.bidegrees.iter().map(|(a, b)| format!("({a},{b})")).collect();
            let block = r.block.map_or("-".to_string(), |b| b.to_string());
            s.push_str(&format!("{:<16} {:>5} {:>5} {:>3} {:>5}  {}\n", r.id, r.dim_v, r.dim_z, r.d, block, bd.join(" ")));
        }
        s.push_str("\nquotients\n");
        for q in &self.quotients {
            s.push_str(&format!("line {:>2}  zeta0 = {:?}  rho'_v = ({})\n", q.line, q.zeta0, q.rho_prime_v.join(", ")));
        }
        s.push_str(&format!(
            "\n{} table lines, {} appendix cases, {} quotients\n",
            self.table_lines().len(),
            self.appendix_numbers().len(),
            self.quotients.len()
        ));
        s
    }
}
