//! Resolving logic references: built-in names, definition-file paths, and
//! the registry the claims executor runs against (swappable in tests).

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{anyhow, Result};

use mvlab::kernel::{builtin_logic, builtin_logics, Connective, Logic};

use crate::config::LogicConfig;

/// Named logics the claims executor resolves against. Defaults to the
/// built-in fixtures; tests substitute mutated copies.
#[derive(Clone, Debug)]
pub struct Registry {
    logics: BTreeMap<String, Logic>,
}

impl Registry {
    pub fn builtin() -> Registry {
        Registry {
            logics: builtin_logics()
                .into_iter()
                .map(|l| (l.name().to_string(), l))
                .collect(),
        }
    }

    pub fn get(&self, name: &str) -> Option<&Logic> {
        self.logics
            .get(name)
            .or_else(|| self.logics.values().find(|l| l.name().eq_ignore_ascii_case(name)))
    }

    pub fn insert(&mut self, logic: Logic) {
        self.logics.insert(logic.name().to_string(), logic);
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.logics.keys().map(String::as_str)
    }

    /// The named logic extended with connectives borrowed from other
    /// registry logics ("toolbox:circ" or plain "circ", searched in order).
    pub fn extended(&self, name: &str, borrow: &[String]) -> Result<Logic> {
        let mut logic = self
            .get(name)
            .ok_or_else(|| anyhow!("no logic named `{name}` in the registry"))?
            .clone();
        for spec in borrow {
            let conn = self.find_connective(spec)?;
            logic = logic
                .with_connective(conn)
                .map_err(|e| anyhow!("extending {name} with {spec}: {e}"))?;
        }
        Ok(logic)
    }

    /// Resolve "logic:connective" or a bare connective name searched across
    /// the registry in name order.
    pub fn find_connective(&self, spec: &str) -> Result<Connective> {
        if let Some((logic_name, conn_name)) = spec.split_once(':') {
            let logic = self
                .get(logic_name)
                .ok_or_else(|| anyhow!("no logic named `{logic_name}`"))?;
            return logic
                .connective(conn_name)
                .cloned()
                .ok_or_else(|| anyhow!("no connective `{conn_name}` in {logic_name}"));
        }
        for logic in self.logics.values() {
            if let Some(c) = logic.connective(spec) {
                return Ok(c.clone());
            }
        }
        Err(anyhow!("no connective `{spec}` in any registry logic"))
    }
}

/// Resolve a CLI logic reference: a built-in name first, then a definition
/// file path.
pub fn resolve_logic(reference: &str) -> Result<Logic> {
    if let Some(logic) = builtin_logic(reference) {
        return Ok(logic);
    }
    let path = Path::new(reference);
    if path.exists() {
        return LogicConfig::load(path)?.to_logic();
    }
    Err(anyhow!(
        "`{reference}` is neither a built-in logic ({}) nor a definition file",
        builtin_logics().iter().map(|l| l.name().to_string()).collect::<Vec<_>>().join(", ")
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_names_resolve_case_insensitively() {
        assert_eq!(resolve_logic("ccsl3").unwrap().name(), "cCSL3");
        assert!(resolve_logic("nope").is_err());
    }

    #[test]
    fn registry_extension_borrows_connectives() {
        let registry = Registry::builtin();
        let extended = registry.extended("M3V", &["toolbox:circ".to_string()]).unwrap();
        assert!(extended.connective("circ").is_some());
        let extended = registry.extended("M3V", &["circ".to_string()]).unwrap();
        assert!(extended.connective("circ").is_some());
        assert!(registry.extended("M3V", &["nope".to_string()]).is_err());
    }
}
