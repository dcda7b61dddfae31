use std::collections::HashSet;

use super::RingError;

/// Names of the differences `θ_1..θ_n` and indeterminates `y^1..y^m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    difference_names: Vec<String>,
    indeterminate_names: Vec<String>,
}

impl RingContext {
    pub fn new<S: Into<String>>(
        differences: impl IntoIterator<Item = S>,
        indeterminates: impl IntoIterator<Item = S>,
    ) -> Result<Self, RingError> {
        let difference_names: Vec<String> = differences.into_iter().map(Into::into).collect();
        let indeterminate_names: Vec<String> =
            indeterminates.into_iter().map(Into::into).collect();
        if difference_names.is_empty() {
            return Err(RingError::InvalidContext("at least one difference is required".into()));
        }
        if indeterminate_names.is_empty() {
            return Err(RingError::InvalidContext(
                "at least one indeterminate is required".into(),
            ));
        }
        for (what, names) in [
            ("difference", &difference_names),
            ("indeterminate", &indeterminate_names),
        ] {
            let mut seen = HashSet::new();
            for name in names {
                if !seen.insert(name.as_str()) {
                    return Err(RingError::InvalidContext(format!(
                        "duplicate {what} name `{name}`"
                    )));
                }
            }
        }
        Ok(Self {
            difference_names,
            indeterminate_names,
        })
    }

    /// Context with differences `t1..tn` and indeterminates `y1..ym`.
    pub fn generic(n: usize, m: usize) -> Result<Self, RingError> {
        Self::new(
            (1..=n).map(|i| format!("t{i}")),
            (1..=m).map(|j| format!("y{j}")),
        )
    }

    /// Number of differences.
    pub fn n(&self) -> usize {
        self.difference_names.len()
    }

    /// Number of indeterminates.
    pub fn m(&self) -> usize {
        self.indeterminate_names.len()
    }

    pub fn difference_names(&self) -> &[String] {
        &self.difference_names
    }

    pub fn indeterminate_names(&self) -> &[String] {
        &self.indeterminate_names
    }

    pub fn difference_index(&self, name: &str) -> Option<usize> {
        self.difference_names.iter().position(|n| n == name)
    }

    pub fn indeterminate_index(&self, name: &str) -> Option<usize> {
        self.indeterminate_names.iter().position(|n| n == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_duplicate_names() {
        assert!(RingContext::new(Vec::<String>::new(), vec!["u".into()]).is_err());
        assert!(RingContext::new(vec!["x"], Vec::<&str>::new()).is_err());
        assert!(RingContext::new(vec!["x", "x"], vec!["u"]).is_err());
        assert!(RingContext::new(vec!["x"], vec!["u", "u"]).is_err());
        // the same name may be used for a difference and an indeterminate
        assert!(RingContext::new(vec!["x"], vec!["x"]).is_ok());
    }

    #[test]
    fn lookup() {
        let ctx = RingContext::new(vec!["x", "y", "z", "w"], vec!["u"]).unwrap();
        assert_eq!(ctx.n(), 4);
        assert_eq!(ctx.m(), 1);
        assert_eq!(ctx.difference_index("z"), Some(2));
        assert_eq!(ctx.indeterminate_index("v"), None);
    }
}
