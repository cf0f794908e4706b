use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Uniform evaluation grid over `[x_min, x_max]`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GridSpec {
    x_min: f64,
    x_max: f64,
    points: usize,
}

impl GridSpec {
    pub fn new(x_min: f64, x_max: f64, points: usize) -> Result<Self> {
        if !x_min.is_finite() || !x_max.is_finite() || !(x_min < x_max) {
            return Err(Error::Domain("grid requires finite x_min < x_max"));
        }
        if points < 2 {
            return Err(Error::Domain("grid requires at least two points"));
        }
        Ok(GridSpec { x_min, x_max, points })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn len(&self) -> usize {
        self.points
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn step(&self) -> f64 {
        (self.x_max - self.x_min) / (self.points - 1) as f64
    }

    /// The `i`-th node; the last node is exactly `x_max`.
    pub fn node(&self, i: usize) -> f64 {
        if i + 1 == self.points {
            self.x_max
        } else {
            self.x_min + i as f64 * self.step()
        }
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.points).map(|i| self.node(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strictly_increasing() {
        let g = GridSpec::new(-5.0, 5.0, 2001).unwrap();
        let xs = g.nodes();
        assert_eq!(xs.len(), 2001);
        assert_eq!(xs[0], -5.0);
        assert_eq!(xs[2000], 5.0);
        assert!(xs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn validation() {
        assert!(GridSpec::new(1.0, 1.0, 5).is_err());
        assert!(GridSpec::new(0.0, 1.0, 1).is_err());
        assert!(GridSpec::new(0.0, f64::INFINITY, 3).is_err());
    }
}
