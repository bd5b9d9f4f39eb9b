use super::classify::Classifier;
use super::{vertex_figure_poset, ConicCertificate, SearchConstraint};
use crate::lattice::{FacePoset, SubComplex};

/// Result of replaying a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub valid: bool,
    /// 1-based number of the first illegal step; `None` when the certificate is
    /// valid or only its terminal state is wrong.
    pub failed_step: Option<usize>,
    pub message: String,
}

impl Verification {
    fn ok() -> Self {
        Verification { valid: true, failed_step: None, message: "certificate is valid".into() }
    }

    fn fail(step: Option<usize>, message: String) -> Self {
        Verification { valid: false, failed_step: step, message }
    }
}

/// Replays `cert` on the face lattice of `p`, deleting one interval at a time,
/// and checks every step against `constraint`. Base classes and face numbers are
/// recomputed rather than trusted.
pub fn verify_certificate(p: &FacePoset, cert: &ConicCertificate, constraint: SearchConstraint) -> Verification {
    let mut classifier = Classifier::default();
    let mut current = SubComplex::full(p);
    for (i, step) in cert.steps.iter().enumerate() {
        let n = i + 1;
        let fail = |msg: String| Verification::fail(Some(n), format!("step {n}: {msg}"));
        let v = step.vertex;
        if !current.vertex_alive(v) {
            return fail(format!("vertex {v} is not present"));
        }
        if step.max_face.0 >= p.len() {
            return fail(format!("face {} does not exist", step.max_face));
        }
        match current.cone_face(v) {
            Ok(Some(e)) if e == step.max_face => {}
            Ok(Some(e)) => {
                return fail(format!(
                    "the unique maximal face at vertex {v} is {:?}, not {:?}",
                    p.face(e).vertex_list(),
                    p.face(step.max_face).vertex_list()
                ))
            }
            Ok(None) => return fail(format!("vertex {v} has several maximal faces and is not a cone vertex")),
            Err(e) => return fail(e.to_string()),
        }
        if p.face(step.max_face).dim < 1 {
            return fail(format!("vertex {v} is isolated; only the terminal vertex may remain alone"));
        }
        let figure = match vertex_figure_poset(&current, v, step.max_face) {
            Ok(f) => f,
            Err(e) => return fail(e.to_string()),
        };
        let class = classifier.classify(&figure);
        if class != step.base_class {
            return fail(format!("base is {class}, certificate records {}", step.base_class));
        }
        let f = figure.f_vector();
        if f != step.base_f_vector {
            return fail(format!("base f-vector is {f}, certificate records {}", step.base_f_vector));
        }
        if !constraint.accepts(&class) {
            return fail(format!("base {class} violates the '{constraint}' constraint"));
        }
        current = match current.delete_interval(v, step.max_face) {
            Ok(next) => next,
            Err(e) => return fail(e.to_string()),
        };
        if class.dim() as i32 > current.dim() {
            return fail(format!("base dimension {} exceeds the remaining dimension {}", class.dim(), current.dim()));
        }
    }
    let t = cert.terminal_vertex;
    let alive = current.alive_vertices();
    if alive != [t] || current.alive_faces().count() != 2 {
        return Verification::fail(
            None,
            format!("replay ends with vertices {alive:?} instead of the single terminal vertex {t}"),
        );
    }
    Verification::ok()
}
