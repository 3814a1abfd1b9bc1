use std::sync::Arc;

use super::{EcProbe, FamilyAccess};
use crate::error::{Error, Result};
use crate::graph::{SeparatorInstance, VertexSet};
use crate::separator::{self, Separator};

/// The family of important X–Y separators of one instance, ordered by `≺*`
/// and accessed through flow computations.
#[derive(Clone, Debug)]
pub struct SeparatorFamily {
    context: Arc<SeparatorInstance>,
}

impl SeparatorFamily {
    pub fn new(context: SeparatorInstance) -> Self {
        SeparatorFamily {
            context: Arc::new(context),
        }
    }

    pub fn from_shared(context: Arc<SeparatorInstance>) -> Self {
        SeparatorFamily { context }
    }

    pub fn context(&self) -> &Arc<SeparatorInstance> {
        &self.context
    }

    pub fn separator(&self, vertices: VertexSet) -> Result<Separator> {
        Separator::new(&self.context, vertices)
    }
}

impl FamilyAccess for SeparatorFamily {
    type Element = Separator;

    fn universe_size(&self) -> usize {
        self.context.graph().vertex_count()
    }

    fn members<'a>(&'a self, e: &'a Separator) -> &'a VertexSet {
        e.vertices()
    }

    fn smallest(&self) -> Result<Option<Separator>> {
        separator::smallest_important_separator(&self.context)
    }

    fn witness(&self, e: &Separator, v: usize) -> Result<Option<Separator>> {
        separator::witness(e, v)
    }

    fn precedes(&self, a: &Separator, b: &Separator) -> Result<bool> {
        separator::precedes(a, b)
    }
}

impl EcProbe for SeparatorFamily {
    fn sm(&self) -> Result<Option<VertexSet>> {
        Ok(self.smallest()?.map(Separator::into_vertices))
    }

    fn witness(&self, s: &VertexSet, v: usize) -> Result<Option<VertexSet>> {
        let k = self.separator(s.clone())?;
        if !separator::is_important(&k) {
            return Err(Error::NotASeparator(format!("{{{s}}} is not important")));
        }
        Ok(separator::witness(&k, v)?.map(Separator::into_vertices))
    }

    fn precedes(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        separator::precedes(&self.separator(a.clone())?, &self.separator(b.clone())?)
    }
}
