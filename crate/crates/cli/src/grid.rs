use anyhow::{bail, Context, Result};
use hypercauchy_core::numerics::GridSpec;

/// Parses `a:b:n` into an `n`-point grid on `[a, b]`.
pub fn parse_grid(s: &str) -> Result<GridSpec> {
    let parts: Vec<&str> = s.split(':').collect();
    let [a, b, n] = parts[..] else {
        bail!("grid must be written as min:max:points, got {s:?}");
    };
    let a: f64 = a.trim().parse().with_context(|| format!("bad grid minimum {a:?}"))?;
    let b: f64 = b.trim().parse().with_context(|| format!("bad grid maximum {b:?}"))?;
    let n: usize = n.trim().parse().with_context(|| format!("bad grid point count {n:?}"))?;
    Ok(GridSpec::new(a, b, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_rejects() {
        let g = parse_grid("-5:5:2001").unwrap();
        assert_eq!((g.x_min(), g.x_max(), g.len()), (-5.0, 5.0, 2001));
        assert_eq!(g.node(1000), 0.0);
        for bad in ["", "1:2", "a:1:3", "1:2:x", "2:1:10", "0:1:1", "0:1:3:4"] {
            assert!(parse_grid(bad).is_err(), "{bad}");
        }
    }
}
