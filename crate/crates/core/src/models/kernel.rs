use crate::error::{Error, Result};
use crate::geometry::{Geometry, GeometrySpace, PreparedPoint};

use super::latent::{LatentConfiguration, Positions};

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn new(dim: usize, data: Vec<f64>) -> Result<Self> {
        if dim == 0 || data.len() != dim * dim {
            return Err(Error::input(format!(
                "expected {dim}x{dim} = {} entries, got {}",
                dim * dim,
                data.len()
            )));
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(Error::input("matrix entries must be finite"));
        }
        Ok(Matrix { dim, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::input("matrix rows must form a square"));
        }
        Self::new(dim, rows.concat())
    }

    pub fn identity(dim: usize) -> Self {
        let mut data = vec![0.0; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = 1.0;
        }
        Matrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    /// `x' A y`.
    pub fn bilinear(&self, x: &[f64], y: &[f64]) -> f64 {
        let mut total = 0.0;
        for (i, xi) in x.iter().enumerate() {
            if *xi == 0.0 {
                continue;
            }
            let row = &self.data[i * self.dim..(i + 1) * self.dim];
            total += xi * row.iter().zip(y).map(|(a, b)| a * b).sum::<f64>();
        }
        total
    }
}

/// Similarity `s(z_i, z_j)` between latent positions.
#[derive(Debug, Clone, PartialEq)]
pub enum SimilarityKernel {
    /// `-d(z_i, z_j)`.
    NegativeDistance(GeometrySpace),
    /// `a_i + b_j - d(z_i, z_j)`.
    DistanceWithEffects(GeometrySpace),
    /// `z_i' z_j`.
    Dot,
    /// `v_i' v_j / |v_j|`, the signed scalar projection of `v_i` onto `v_j`.
    Projection,
    /// `a_i + b_j + z_i' z_j`.
    Bilinear,
    /// `z_i' A z_j`.
    Quadratic(Matrix),
    /// Block probability `A[class(i), class(j)]`; bypasses the link.
    Sbm(Matrix),
    /// `z_i' A z_j` for simplex memberships.
    Mmsbm(Matrix),
    /// `a_i + a_j + zeta z_i' z_j`.
    Ard { zeta: f64 },
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn one_hot_class(x: &[f64]) -> Option<usize> {
    let mut class = None;
    for (k, &v) in x.iter().enumerate() {
        if v == 1.0 {
            if class.is_some() {
                return None;
            }
            class = Some(k);
        } else if v != 0.0 {
            return None;
        }
    }
    class
}

impl SimilarityKernel {
    pub fn is_distance(&self) -> bool {
        matches!(
            self,
            SimilarityKernel::NegativeDistance(_) | SimilarityKernel::DistanceWithEffects(_)
        )
    }

    /// Kernels whose value can differ between `(i, j)` and `(j, i)`.
    pub fn is_asymmetric(&self) -> bool {
        matches!(
            self,
            SimilarityKernel::Projection
                | SimilarityKernel::Bilinear
                | SimilarityKernel::DistanceWithEffects(_)
        )
    }

    /// Whether the kernel returns a probability directly.
    pub fn bypasses_link(&self) -> bool {
        matches!(self, SimilarityKernel::Sbm(_))
    }

    pub fn space(&self) -> Option<GeometrySpace> {
        match self {
            SimilarityKernel::NegativeDistance(s) | SimilarityKernel::DistanceWithEffects(s) => {
                Some(*s)
            }
            _ => None,
        }
    }

    /// Checks that `config` carries what the kernel needs.
    pub fn validate(&self, config: &LatentConfiguration) -> Result<()> {
        config.validate_effects()?;
        let needs_vectors = |config: &LatentConfiguration| -> Result<usize> {
            match &config.positions {
                Positions::Vectors(v) => {
                    let t = v.first().map_or(0, |x| x.len());
                    if v.iter().any(|x| x.len() != t) {
                        return Err(Error::input("latent vectors differ in dimension"));
                    }
                    if v.iter().flatten().any(|x| !x.is_finite()) {
                        return Err(Error::input("latent vectors must be finite"));
                    }
                    Ok(t)
                }
                _ => Err(Error::input("kernel requires vector positions")),
            }
        };
        match self {
            SimilarityKernel::NegativeDistance(space)
            | SimilarityKernel::DistanceWithEffects(space) => {
                match (space, &config.positions) {
                    (GeometrySpace::Curved(g), Positions::Polar(ps)) => {
                        ps.iter().try_for_each(|p| g.validate(*p))?
                    }
                    (GeometrySpace::Curved(Geometry::Euclidean), Positions::Vectors(_)) => {
                        needs_vectors(config)?;
                    }
                    (GeometrySpace::Ultrametric(t), Positions::Leaves(ls)) => {
                        if ls.iter().any(|&l| l >= t.leaves()) {
                            return Err(Error::input("leaf index out of range"));
                        }
                    }
                    _ => return Err(Error::input("positions do not match the kernel geometry")),
                }
                if matches!(self, SimilarityKernel::DistanceWithEffects(_))
                    && config.sender.is_none()
                {
                    return Err(Error::input("kernel requires sender effects"));
                }
            }
            SimilarityKernel::Dot | SimilarityKernel::Projection => {
                needs_vectors(config)?;
            }
            SimilarityKernel::Bilinear | SimilarityKernel::Ard { .. } => {
                needs_vectors(config)?;
                if config.sender.is_none() {
                    return Err(Error::input("kernel requires sender/sociality effects"));
                }
                if let SimilarityKernel::Ard { zeta } = self {
                    if !zeta.is_finite() {
                        return Err(Error::input("zeta must be finite"));
                    }
                }
            }
            SimilarityKernel::Quadratic(a) | SimilarityKernel::Mmsbm(a) => {
                let t = needs_vectors(config)?;
                if t != a.dim() {
                    return Err(Error::input(format!(
                        "latent dimension {t} does not match {}x{} matrix",
                        a.dim(),
                        a.dim()
                    )));
                }
                if let (SimilarityKernel::Mmsbm(_), Positions::Vectors(v)) =
                    (self, &config.positions)
                {
                    for x in v {
                        if x.iter().any(|p| *p < 0.0) || (x.iter().sum::<f64>() - 1.0).abs() > 1e-12
                        {
                            return Err(Error::input("membership vectors must lie on the simplex"));
                        }
                    }
                }
            }
            SimilarityKernel::Sbm(a) => {
                let t = needs_vectors(config)?;
                if t != a.dim() {
                    return Err(Error::input("class count does not match block matrix"));
                }
                if (0..t).any(|i| (0..t).any(|j| !(0.0..=1.0).contains(&a.get(i, j)))) {
                    return Err(Error::input("block probabilities must lie in [0, 1]"));
                }
                if let Positions::Vectors(v) = &config.positions {
                    if v.iter().any(|x| one_hot_class(x).is_none()) {
                        return Err(Error::input("block memberships must be one-hot"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Similarity given a precomputed distance (distance kernels only use it).
    pub(crate) fn similarity_with_distance(
        &self,
        config: &LatentConfiguration,
        i: usize,
        j: usize,
        distance: impl FnOnce() -> f64,
    ) -> Result<f64> {
        let vec = |k: usize| match &config.positions {
            Positions::Vectors(v) => &v[k][..],
            _ => &[][..],
        };
        Ok(match self {
            SimilarityKernel::NegativeDistance(_) => -distance(),
            SimilarityKernel::DistanceWithEffects(_) => {
                config.sender_effect(i)? + config.receiver_effect(j)? - distance()
            }
            SimilarityKernel::Dot => dot(vec(i), vec(j)),
            SimilarityKernel::Projection => {
                let norm = dot(vec(j), vec(j)).sqrt();
                if norm == 0.0 {
                    return Err(Error::Singular(format!(
                        "node {j} has a zero latent vector"
                    )));
                }
                dot(vec(i), vec(j)) / norm
            }
            SimilarityKernel::Bilinear => {
                config.sender_effect(i)? + config.receiver_effect(j)? + dot(vec(i), vec(j))
            }
            SimilarityKernel::Quadratic(a) | SimilarityKernel::Mmsbm(a) => {
                a.bilinear(vec(i), vec(j))
            }
            SimilarityKernel::Sbm(a) => {
                let ci = one_hot_class(vec(i)).unwrap_or(0);
                let cj = one_hot_class(vec(j)).unwrap_or(0);
                a.get(ci, cj)
            }
            SimilarityKernel::Ard { zeta } => {
                config.sender_effect(i)? + config.sender_effect(j)? + zeta * dot(vec(i), vec(j))
            }
        })
    }
}

/// Raw latent distance between nodes `i` and `j` for a distance kernel.
pub(crate) fn latent_distance(
    space: &GeometrySpace,
    config: &LatentConfiguration,
    i: usize,
    j: usize,
) -> f64 {
    match (space, &config.positions) {
        (GeometrySpace::Curved(g), Positions::Polar(ps)) => {
            PreparedPoint::new(*g, ps[i]).distance(&PreparedPoint::new(*g, ps[j]))
        }
        (GeometrySpace::Ultrametric(t), Positions::Leaves(ls)) => {
            f64::from(t.distance_unchecked(ls[i], ls[j]))
        }
        (_, Positions::Vectors(v)) => v[i]
            .iter()
            .zip(&v[j])
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt(),
        _ => f64::NAN,
    }
}

/// `s(z_i, z_j)` for one ordered pair.
pub fn evaluate_kernel(
    kernel: &SimilarityKernel,
    config: &LatentConfiguration,
    i: usize,
    j: usize,
) -> Result<f64> {
    let n = config.len();
    if i >= n || j >= n {
        return Err(Error::input(format!("node index out of range for n={n}")));
    }
    if i == j {
        return Err(Error::input(
            "similarity is defined for distinct nodes only",
        ));
    }
    kernel.validate(config)?;
    kernel.similarity_with_distance(config, i, j, || match kernel.space() {
        Some(space) => latent_distance(&space, config, i, j),
        None => f64::NAN,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{PolarPoint, UltrametricTree};

    fn vecs(v: Vec<Vec<f64>>) -> LatentConfiguration {
        LatentConfiguration::new(Positions::Vectors(v))
    }

    #[test]
    fn dot_orthogonal() {
        let c = vecs(vec![vec![1.0, 0.0], vec![0.0, 1.0]]);
        assert_eq!(
            evaluate_kernel(&SimilarityKernel::Dot, &c, 0, 1).unwrap(),
            0.0
        );
    }

    #[test]
    fn projection() {
        let c = vecs(vec![vec![2.0, 0.0], vec![1.0, 0.0], vec![0.0, 0.0]]);
        assert_eq!(
            evaluate_kernel(&SimilarityKernel::Projection, &c, 0, 1).unwrap(),
            2.0
        );
        // projecting onto a zero vector is singular
        assert!(matches!(
            evaluate_kernel(&SimilarityKernel::Projection, &c, 0, 2),
            Err(Error::Singular(_))
        ));
    }

    #[test]
    fn sbm_lookup() {
        let a = Matrix::from_rows(&[vec![0.9, 0.3], vec![0.3, 0.8]]).unwrap();
        let c = vecs(vec![vec![1.0, 0.0], vec![0.0, 1.0]]);
        assert_eq!(
            evaluate_kernel(&SimilarityKernel::Sbm(a.clone()), &c, 0, 1).unwrap(),
            0.3
        );
        let bad = vecs(vec![vec![0.5, 0.5], vec![0.0, 1.0]]);
        assert!(evaluate_kernel(&SimilarityKernel::Sbm(a), &bad, 0, 1).is_err());
    }

    #[test]
    fn mmsbm_identity() {
        // (1/2, 1/2) I (1/2, 1/2)' = 1/4 + 1/4
        let c = vecs(vec![vec![0.5, 0.5], vec![0.5, 0.5]]);
        let k = SimilarityKernel::Mmsbm(Matrix::identity(2));
        assert_eq!(evaluate_kernel(&k, &c, 0, 1).unwrap(), 0.5);
    }

    #[test]
    fn quadratic_identity_equals_dot() {
        let c = vecs(vec![vec![0.3, -1.2, 2.0], vec![1.5, 0.25, -0.5]]);
        let q =
            evaluate_kernel(&SimilarityKernel::Quadratic(Matrix::identity(3)), &c, 0, 1).unwrap();
        let d = evaluate_kernel(&SimilarityKernel::Dot, &c, 0, 1).unwrap();
        assert_eq!(q, d);
    }

    #[test]
    fn effects_kernels() {
        let c = vecs(vec![vec![1.0, 2.0], vec![3.0, 0.5]])
            .with_sender(vec![0.1, 0.2])
            .with_receiver(vec![-1.0, -2.0]);
        assert!(
            (evaluate_kernel(&SimilarityKernel::Bilinear, &c, 0, 1).unwrap() - (0.1 - 2.0 + 4.0))
                .abs()
                < 1e-12
        );
        let ard = SimilarityKernel::Ard { zeta: 0.5 };
        assert!((evaluate_kernel(&ard, &c, 0, 1).unwrap() - (0.1 + 0.2 + 2.0)).abs() < 1e-12);
        let no_effects = vecs(vec![vec![1.0], vec![2.0]]);
        assert!(evaluate_kernel(&SimilarityKernel::Bilinear, &no_effects, 0, 1).is_err());
    }

    #[test]
    fn distance_kernels() {
        let space = GeometrySpace::Curved(Geometry::Hyperbolic);
        let c = LatentConfiguration::new(Positions::Polar(vec![
            PolarPoint::new(2.0, 0.0),
            PolarPoint::new(2.0, std::f64::consts::PI),
        ]))
        .with_sender(vec![1.0, 0.5]);
        let s = evaluate_kernel(&SimilarityKernel::NegativeDistance(space), &c, 0, 1).unwrap();
        assert!((s + 4.0).abs() < 1e-12);
        let s = evaluate_kernel(&SimilarityKernel::DistanceWithEffects(space), &c, 0, 1).unwrap();
        let t = evaluate_kernel(&SimilarityKernel::DistanceWithEffects(space), &c, 1, 0).unwrap();
        assert!((s - (1.5 - 4.0)).abs() < 1e-12);
        assert_eq!(s, t);

        let tree = UltrametricTree::new(2, 3).unwrap();
        let c = LatentConfiguration::new(Positions::Leaves(vec![0, 7]));
        let k = SimilarityKernel::NegativeDistance(GeometrySpace::Ultrametric(tree));
        assert_eq!(evaluate_kernel(&k, &c, 0, 1).unwrap(), -3.0);
    }

    #[test]
    fn input_errors() {
        let c = vecs(vec![vec![1.0, 0.0], vec![0.0, 1.0, 2.0]]);
        assert!(evaluate_kernel(&SimilarityKernel::Dot, &c, 0, 1).is_err());
        let c = vecs(vec![vec![1.0], vec![0.0]]);
        assert!(evaluate_kernel(&SimilarityKernel::Dot, &c, 0, 0).is_err());
        assert!(evaluate_kernel(&SimilarityKernel::Dot, &c, 0, 5).is_err());
        assert!(
            evaluate_kernel(&SimilarityKernel::Quadratic(Matrix::identity(2)), &c, 0, 1).is_err()
        );
    }
}
