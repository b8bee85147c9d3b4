use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use liecps::catalog::{self, CatalogEntry, Params};
use liecps::linalg::parse_rational;
use liecps::lsa::BilinearProduct;
use liecps::schema::{from_json, CpsDoc, ProductDoc};
use liecps::structures::ComplexProductStructure;
use liecps::{CirclePoint, Error, Result};
use serde::de::DeserializeOwned;

/// Where a complex product structure comes from: a JSON file or a catalog
/// entry.
#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Structure document (algebra, J, E).
    pub file: Option<PathBuf>,
    /// Catalog key instead of a file.
    #[arg(long)]
    pub catalog: Option<String>,
    /// Structure name within the catalog entry (defaults to the first).
    #[arg(long)]
    pub structure: Option<String>,
    /// Family parameter: t = tan(theta/4), the stereographic coordinate of
    /// the half angle. Repeatable where several samples make sense.
    #[arg(long = "t", value_name = "P/Q", allow_hyphen_values = true)]
    pub t: Vec<String>,
    /// Size parameter for the sized catalog entries.
    #[arg(long)]
    pub n: Option<usize>,
    /// Product document used to instantiate `affA`.
    #[arg(long = "with-product", value_name = "PATH")]
    pub with_product: Option<PathBuf>,
}

pub fn read_doc<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    from_json(&text)
}

pub fn read_product(path: &Path) -> Result<BilinearProduct> {
    read_doc::<ProductDoc>(path)?.to_product()
}

pub fn samples(ts: &[String]) -> Result<Vec<CirclePoint>> {
    ts.iter().map(|t| parse_rational(t).map(|r| CirclePoint::from_parameter(&r))).collect()
}

impl Source {
    pub fn params(&self) -> Result<Params> {
        let mut p = Params::none();
        if let Some(t) = self.t.first() {
            p.point = Some(CirclePoint::from_parameter(&parse_rational(t)?));
        }
        p.n = self.n;
        if let Some(path) = &self.with_product {
            p.product = Some(read_product(path)?);
        }
        Ok(p)
    }

    pub fn entry(&self) -> Result<Option<CatalogEntry>> {
        match &self.catalog {
            Some(key) => catalog::get(key, &self.params()?).map(Some),
            None => Ok(None),
        }
    }

    pub fn cps(&self) -> Result<ComplexProductStructure> {
        if let Some(entry) = self.entry()? {
            let name = match &self.structure {
                Some(s) => s.clone(),
                None => entry
                    .structures
                    .first()
                    .map(|s| s.name.clone())
                    .ok_or_else(|| Error::UnknownKey(format!("{} has no complex product structure", entry.key)))?,
            };
            return entry.cps(&name);
        }
        match &self.file {
            Some(path) => read_doc::<CpsDoc>(path)?.to_cps(),
            None => Err(Error::Parse("no input: give a structure file or --catalog KEY".into())),
        }
    }
}
