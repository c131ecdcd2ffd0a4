//! Light-field data model: sub-aperture view grids, disparity maps,
//! camera parameters.

use crate::error::{Error, Result};
use crate::grid::Grid2;
use crate::scalar::Scalar;

/// A 4D light field stored as a `U x V` grid of grayscale views.
///
/// Views are luminance in `[0, 1]`, all with identical spatial size.
/// `center` is the angular index of the reference view.
#[derive(Debug, Clone)]
pub struct LightField<T> {
    views: Vec<Grid2<T>>,
    angular_dims: (usize, usize),
    center: (usize, usize),
}

impl<T: Scalar> LightField<T> {
    /// Views must be supplied in row-major angular order: index `u * V + v`.
    /// The center defaults to the geometric center (floor for even dims).
    pub fn new(views: Vec<Grid2<T>>, angular_dims: (usize, usize)) -> Result<Self> {
        let center = ((angular_dims.0 - 1) / 2, (angular_dims.1 - 1) / 2);
        Self::with_center(views, angular_dims, center)
    }

    pub fn with_center(
        views: Vec<Grid2<T>>,
        angular_dims: (usize, usize),
        center: (usize, usize),
    ) -> Result<Self> {
        let (ud, vd) = angular_dims;
        if ud == 0 || vd == 0 {
            return Err(Error::MalformedScene("empty angular dimensions".into()));
        }
        if views.len() != ud * vd {
            return Err(Error::MalformedScene(format!(
                "expected {} views for {}x{} angular grid, got {}",
                ud * vd,
                ud,
                vd,
                views.len()
            )));
        }
        if center.0 >= ud || center.1 >= vd {
            return Err(Error::MalformedScene(format!(
                "center {:?} outside angular grid {}x{}",
                center, ud, vd
            )));
        }
        let shape = views[0].shape();
        for (i, view) in views.iter().enumerate() {
            if view.shape() != shape {
                return Err(Error::MalformedScene(format!(
                    "view {} has size {:?}, expected {:?}",
                    i,
                    view.shape(),
                    shape
                )));
            }
            if view
                .iter()
                .any(|v| !v.is_finite() || *v < T::zero() || *v > T::one())
            {
                return Err(Error::MalformedScene(format!(
                    "view {} has samples outside [0, 1]",
                    i
                )));
            }
        }
        Ok(Self {
            views,
            angular_dims,
            center,
        })
    }

    pub fn angular_dims(&self) -> (usize, usize) {
        self.angular_dims
    }

    pub fn center(&self) -> (usize, usize) {
        self.center
    }

    pub fn spatial_dims(&self) -> (usize, usize) {
        self.views[0].shape()
    }

    pub fn num_views(&self) -> usize {
        self.views.len()
    }

    #[inline]
    pub fn view(&self, u: usize, v: usize) -> &Grid2<T> {
        &self.views[u * self.angular_dims.1 + v]
    }

    pub fn center_view(&self) -> &Grid2<T> {
        self.view(self.center.0, self.center.1)
    }

    /// Angular offsets `(u - u_c, v - v_c)` in view storage order.
    pub fn angular_offsets(&self) -> Vec<(isize, isize)> {
        let (uc, vc) = self.center;
        let mut offsets = Vec::with_capacity(self.views.len());
        for u in 0..self.angular_dims.0 {
            for v in 0..self.angular_dims.1 {
                offsets.push((u as isize - uc as isize, v as isize - vc as isize));
            }
        }
        offsets
    }

    pub fn views(&self) -> &[Grid2<T>] {
        &self.views
    }
}

/// Camera intrinsics for the depth/disparity conversion.
#[derive(Debug, Clone, Copy)]
pub struct CameraParams<T> {
    baseline: T,
    focal_length: T,
}

impl<T: Scalar> CameraParams<T> {
    pub fn new(baseline: T, focal_length: T) -> Result<Self> {
        if baseline <= T::zero() || focal_length <= T::zero() {
            return Err(Error::InvalidInput(
                "baseline and focal length must be positive".into(),
            ));
        }
        Ok(Self {
            baseline,
            focal_length,
        })
    }

    pub fn baseline(&self) -> T {
        self.baseline
    }

    pub fn focal_length(&self) -> T {
        self.focal_length
    }
}

/// Depth from disparity: `f * B / d`.
pub fn depth_from_disparity<T: Scalar>(disparity: T, params: &CameraParams<T>) -> Result<T> {
    if disparity == T::zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(params.focal_length() * params.baseline() / disparity)
}

/// Per-pixel disparity field with an optional validity mask.
#[derive(Debug, Clone, PartialEq)]
pub struct DisparityMap<T> {
    values: Grid2<T>,
    validity: Option<Grid2<bool>>,
}

impl<T: Scalar> DisparityMap<T> {
    pub fn new(values: Grid2<T>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput(
                "disparity map contains non-finite values".into(),
            ));
        }
        Ok(Self {
            values,
            validity: None,
        })
    }

    /// Entries where `validity` is false may be non-finite; valid entries may not.
    pub fn with_validity(values: Grid2<T>, validity: Grid2<bool>) -> Result<Self> {
        if values.shape() != validity.shape() {
            return Err(Error::ShapeMismatch {
                expected: format!("{:?}", values.shape()),
                got: format!("{:?}", validity.shape()),
            });
        }
        for (r, c) in values.coords() {
            if validity.get(r, c) && !values.get(r, c).is_finite() {
                return Err(Error::InvalidInput(format!(
                    "non-finite disparity at valid pixel ({r}, {c})"
                )));
            }
        }
        Ok(Self {
            values,
            validity: Some(validity),
        })
    }

    pub fn values(&self) -> &Grid2<T> {
        &self.values
    }

    pub fn validity(&self) -> Option<&Grid2<bool>> {
        self.validity.as_ref()
    }

    pub fn shape(&self) -> (usize, usize) {
        self.values.shape()
    }

    #[inline]
    pub fn is_valid(&self, row: usize, col: usize) -> bool {
        self.validity.as_ref().map_or(true, |m| m.get(row, col))
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> T {
        self.values.get(row, col)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_conversion_examples() {
        let p = CameraParams::new(1.0f64, 1.0).unwrap();
        assert_eq!(depth_from_disparity(2.0, &p).unwrap(), 0.5);
        let p = CameraParams::new(3.0f64, 2.0).unwrap();
        assert_eq!(depth_from_disparity(1.0, &p).unwrap(), 6.0);
    }

    #[test]
    fn depth_conversion_rejects_zero_disparity() {
        let p = CameraParams::new(1.0f64, 1.0).unwrap();
        assert!(matches!(
            depth_from_disparity(0.0, &p),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn camera_params_must_be_positive() {
        assert!(CameraParams::new(0.0f64, 1.0).is_err());
        assert!(CameraParams::new(1.0f64, -2.0).is_err());
    }

    #[test]
    fn light_field_rejects_mixed_sizes() {
        let a = Grid2::filled(4, 4, 0.5f64);
        let b = Grid2::filled(4, 5, 0.5f64);
        let err = LightField::new(vec![a.clone(), b, a.clone(), a], (2, 2));
        assert!(matches!(err, Err(Error::MalformedScene(_))));
    }

    #[test]
    fn light_field_rejects_wrong_count() {
        let a = Grid2::filled(4, 4, 0.5f64);
        let err = LightField::new(vec![a; 3], (2, 2));
        assert!(matches!(err, Err(Error::MalformedScene(_))));
    }

    #[test]
    fn light_field_rejects_out_of_range_samples() {
        let a = Grid2::filled(2, 2, 1.5f64);
        let err = LightField::new(vec![a; 1], (1, 1));
        assert!(matches!(err, Err(Error::MalformedScene(_))));
    }

    #[test]
    fn center_defaults_to_geometric_center() {
        let a = Grid2::filled(2, 2, 0.5f64);
        let lf = LightField::new(vec![a; 9], (3, 3)).unwrap();
        assert_eq!(lf.center(), (1, 1));
    }

    #[test]
    fn disparity_map_rejects_non_finite() {
        let mut g = Grid2::filled(2, 2, 0.0f64);
        g.set(0, 1, f64::NAN);
        assert!(DisparityMap::new(g).is_err());
    }
}
