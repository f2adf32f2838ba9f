//! Everything the library computes about one diagram, in one value.

use serde::Serialize;

use crate::diagram::LinkDiagram;
use crate::invariants::{
    classicality_certificate, homology_class, linking_matrix, pseudo_hopf_decomposition,
    ClassicalityCertificate, HomologyClass, LinkingMatrix, NetCount,
};
use crate::presentation::{presentations, Presentation};
use crate::ribbon::{surface_report, SurfaceReport};
use crate::universe::universe;

#[derive(Clone, Debug, Serialize)]
pub struct Presentations {
    pub group: Presentation,
    pub quandle: Presentation,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologySummary {
    pub class: HomologyClass,
    /// Surviving pseudo-Hopf links per (upper, lower), 1-based.
    pub pseudo_hopf: Vec<NetCount>,
    pub normal_form: String,
}

/// Key order of the JSON form is the field order below.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub code: String,
    pub components: usize,
    pub crossings: usize,
    pub universe: String,
    pub linking_matrix: LinkingMatrix,
    pub homology: HomologySummary,
    pub certificate: ClassicalityCertificate,
    pub surface: SurfaceReport,
    pub classically_realizable: bool,
    pub presentations: Presentations,
}

impl Report {
    pub fn new(d: &LinkDiagram) -> Self {
        let dec = pseudo_hopf_decomposition(d);
        let surface = surface_report(d);
        let classically_realizable = surface.pieces.iter().all(|p| p.genus == 0);
        let (group, quandle) = presentations(d);
        Report {
            code: d.serialize(),
            components: d.component_count(),
            crossings: d.crossing_count(),
            universe: universe(d).to_string(),
            linking_matrix: linking_matrix(d),
            homology: HomologySummary {
                class: homology_class(d),
                pseudo_hopf: dec
                    .net
                    .iter()
                    .map(|c| NetCount { upper: c.upper + 1, lower: c.lower + 1, count: c.count })
                    .collect(),
                normal_form: dec.normal_form().serialize(),
            },
            certificate: classicality_certificate(d),
            surface,
            classically_realizable,
            presentations: Presentations { group, quandle },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
