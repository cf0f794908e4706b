use alloc::string::String;

/// How [`CheckReport::tolerance`] is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum ToleranceMode {
    /// `|measured - expected| <= tolerance`.
    Absolute,
    /// `|measured - expected| <= tolerance * |expected|`.
    Relative,
}

/// Outcome of one executable check.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CheckReport {
    check_name: String,
    passed: bool,
    measured: f64,
    expected: f64,
    tolerance: f64,
    mode: ToleranceMode,
    detail: String,
}

impl CheckReport {
    pub fn new(
        check_name: impl Into<String>,
        measured: f64,
        expected: f64,
        tolerance: f64,
        mode: ToleranceMode,
        detail: impl Into<String>,
    ) -> Self {
        let bound = match mode {
            ToleranceMode::Absolute => tolerance,
            ToleranceMode::Relative => tolerance * expected.abs(),
        };
        // NaN never passes.
        let passed = (measured - expected).abs() <= bound;
        CheckReport {
            check_name: check_name.into(),
            passed,
            measured,
            expected,
            tolerance,
            mode,
            detail: detail.into(),
        }
    }

    pub fn absolute(
        name: impl Into<String>,
        measured: f64,
        expected: f64,
        tolerance: f64,
        detail: impl Into<String>,
    ) -> Self {
        Self::new(name, measured, expected, tolerance, ToleranceMode::Absolute, detail)
    }

    pub fn relative(
        name: impl Into<String>,
        measured: f64,
        expected: f64,
        tolerance: f64,
        detail: impl Into<String>,
    ) -> Self {
        Self::new(name, measured, expected, tolerance, ToleranceMode::Relative, detail)
    }

    /// A failed check for an evaluation that returned an error.
    pub fn errored(name: impl Into<String>, error: &crate::Error) -> Self {
        let mut r = Self::absolute(name, f64::NAN, 0.0, 0.0, alloc::format!("{error}"));
        r.passed = false;
        r
    }

    pub fn check_name(&self) -> &str {
        &self.check_name
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn measured(&self) -> f64 {
        self.measured
    }

    pub fn expected(&self) -> f64 {
        self.expected
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn mode(&self) -> ToleranceMode {
        self.mode
    }

    pub fn detail(&self) -> &str {
        &self.detail
    }
}
