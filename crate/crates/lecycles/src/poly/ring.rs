use std::sync::Arc;

use crate::Error;

/// The ambient polynomial ring Q[z_0, ..., z_n], identified by its ordered
/// list of variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
}

impl Ring {
    /// A ring needs at least two variables (ambient dimension n+1 with n >= 1).
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Result<Arc<Ring>, Error> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        if vars.len() < 2 {
            return Err(Error::Input(format!(
                "ring needs at least 2 variables, got {}",
                vars.len()
            )));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::Input("empty variable name".into()));
            }
            if vars[..i].contains(v) {
                return Err(Error::Input(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(Ring { vars }))
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    /// Same ring with one fresh variable appended (used by the w-trick and
    /// the tag-variable intersection construction). The fresh name contains
    /// `#` so it can never collide with parsed input.
    pub fn extended(&self, fresh: &str) -> Arc<Ring> {
        let mut vars = self.vars.clone();
        vars.push(fresh.to_string());
        Arc::new(Ring { vars })
    }

    /// Ring with variables reordered by `perm` (perm[i] = index in self of
    /// the i-th variable of the new ring).
    pub fn permuted(&self, perm: &[usize]) -> Arc<Ring> {
        let vars = perm.iter().map(|&i| self.vars[i].clone()).collect();
        Arc::new(Ring { vars })
    }
}
