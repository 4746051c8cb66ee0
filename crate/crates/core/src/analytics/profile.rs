use std::collections::HashMap;

use crate::error::AnalyticsError;
use crate::group::{FiniteGroup, GroupId, Subgroup};

/// The distinct proper centralizers of a non-abelian group together with the
/// center `Z(x) = Z(C(x))` of each.
#[derive(Clone, Debug)]
pub struct CentralizerProfile {
    group_id: GroupId,
    center: Subgroup,
    whole: Subgroup,
    proper_centralizers: Vec<Subgroup>,
    centralizer_centers: Vec<Subgroup>,
    element_to_centralizer: Vec<Option<usize>>,
}

/// Computes `Cent(G)`; centralizers are ordered by size and then
/// lexicographically by elements.
pub fn profile(g: &FiniteGroup) -> Result<CentralizerProfile, AnalyticsError> {
    let whole = g.whole();
    let mut distinct: HashMap<Subgroup, usize> = HashMap::new();
    let mut raw_index = vec![None; g.order()];
    let mut found = Vec::new();
    for x in g.elements() {
        let c = g.centralizer(x);
        if c.order() == g.order() {
            continue;
        }
        let next = found.len();
        let idx = *distinct.entry(c.clone()).or_insert_with(|| {
            found.push(c);
            next
        });
        raw_index[x] = Some(idx);
    }
    if found.is_empty() {
        return Err(AnalyticsError::AbelianGroup);
    }

    let mut order: Vec<usize> = (0..found.len()).collect();
    order.sort_by(|&a, &b| found[a].cmp(&found[b]));
    let mut rank = vec![0; found.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    let proper_centralizers: Vec<Subgroup> = order.iter().map(|&i| found[i].clone()).collect();
    let element_to_centralizer = raw_index.iter().map(|i| i.map(|i| rank[i])).collect();

    let centralizer_centers = proper_centralizers
        .iter()
        .map(|c| {
            // Z(x) is the center of C(x) taken as a group in its own right.
            let as_group = g.subgroup_as_group(c);
            let z: Vec<usize> = as_group
                .center()
                .elements()
                .iter()
                .map(|&i| c.elements()[i])
                .collect();
            g.subgroup(&z).expect("center of a subgroup is a subgroup")
        })
        .collect();

    Ok(CentralizerProfile {
        group_id: g.id(),
        center: g.center(),
        whole,
        proper_centralizers,
        centralizer_centers,
        element_to_centralizer,
    })
}

impl CentralizerProfile {
    pub fn group_id(&self) -> GroupId {
        self.group_id
    }

    /// `|Cent(G)|`, counting `G` itself.
    pub fn n(&self) -> usize {
        self.proper_centralizers.len() + 1
    }

    pub fn center(&self) -> &Subgroup {
        &self.center
    }

    pub fn proper_centralizers(&self) -> &[Subgroup] {
        &self.proper_centralizers
    }

    /// `Z(C_i)` for the `i`-th proper centralizer.
    pub fn centralizer_centers(&self) -> &[Subgroup] {
        &self.centralizer_centers
    }

    /// Index into [`Self::proper_centralizers`]; `None` for central elements.
    pub fn centralizer_index(&self, x: usize) -> Option<usize> {
        self.element_to_centralizer[x]
    }

    pub fn is_central(&self, x: usize) -> bool {
        self.element_to_centralizer[x].is_none()
    }

    /// `C(x)`, which is the whole group for central `x`.
    pub fn centralizer_of(&self, x: usize) -> &Subgroup {
        match self.element_to_centralizer[x] {
            Some(i) => &self.proper_centralizers[i],
            None => &self.whole,
        }
    }

    /// `Z(x)`, which is `Z(G)` for central `x`.
    pub fn z_of(&self, x: usize) -> &Subgroup {
        match self.element_to_centralizer[x] {
            Some(i) => &self.centralizer_centers[i],
            None => &self.center,
        }
    }

    /// One element per proper centralizer (the least one mapping to it).
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.proper_centralizers.len()];
        for (x, idx) in self.element_to_centralizer.iter().enumerate() {
            if let Some(i) = *idx {
                reps[i] = reps[i].min(x);
            }
        }
        reps
    }
}
