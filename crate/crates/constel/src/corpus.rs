//! Named constellations from the generators, each with the order it was built for.

use constel_core::generators::{
    aligned_constellation, nested_constellation, occultation, occultation_ample, replicate_paths, zigzag_graph,
};
use constel_core::{ApexOrder, Constellation};

#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub con: Constellation,
    pub order: ApexOrder,
}

impl Instance {
    fn new(name: String, con: Constellation) -> Instance {
        let order = ApexOrder::natural(con.apex());
        Instance { name, con, order }
    }

    fn with_order(name: String, (con, order): (Constellation, ApexOrder)) -> Instance {
        Instance { name, con, order }
    }

    pub fn vertices(&self) -> usize {
        self.con.host().n()
    }
}

/// Every generator at small sizes. Sizes range from a handful of vertices to
/// a few hundred; callers filter.
pub fn corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 2..=6 {
        for l in 1..=4 {
            out.push(Instance::new(format!("zigzag-graph({n},{l})"), zigzag_graph(n, l)));
        }
    }
    for s in 1..=4 {
        for l in 1..=3 {
            for reps in 1..=2 {
                out.push(Instance::new(
                    format!("aligned({s},{l},{reps})"),
                    aligned_constellation(s, l, reps),
                ));
            }
        }
    }
    out.push(Instance::new("aligned(2,6,1)".into(), aligned_constellation(2, 6, 1)));
    for s in 1..=5 {
        for c in 1..=2 {
            out.push(Instance::with_order(format!("occultation({s},{c})"), occultation(s, c)));
            out.push(Instance::with_order(
                format!("occultation-ample({s},{c})"),
                occultation_ample(s, c),
            ));
        }
    }
    for s in 3..=6 {
        out.push(Instance::with_order(
            format!("nested({s},1)"),
            nested_constellation(s, 1),
        ));
    }
    out.push(Instance::new(
        "nested(8,1)x4".into(),
        replicate_paths(&nested_constellation(8, 1).0, 4),
    ));
    out
}

pub fn find(name: &str) -> Option<Instance> {
    corpus().into_iter().find(|i| i.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn names_are_unique_and_orders_valid() {
        let all = corpus();
        let names: BTreeSet<&str> = all.iter().map(|i| i.name.as_str()).collect();
        assert_eq!(names.len(), all.len());
        for i in &all {
            let apex: Vec<usize> = i.con.apex().iter().collect();
            assert!(i.order.ranks(&apex).is_ok(), "{}", i.name);
        }
        assert!(find("zigzag-graph(3,3)").is_some());
        assert!(find("nope").is_none());
    }
}
