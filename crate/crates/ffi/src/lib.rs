//! C ABI for the lemmaflow toolkit.
//!
//! Handles are opaque pointers created and freed by this library; every
//! fallible function returns an [`LfStatus`] and stores a message
//! retrievable with [`lf_last_error`] on failure. Strings returned through
//! out-parameters are NUL-terminated, UTF-8, and owned by the caller, who
//! must release them with [`lf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lemmaflow::diagram::{build_diagram, emit_dot};
use lemmaflow::flow::{discharge, plan, LemmaFlowProof};
use lemmaflow::network::AgentNetwork;
use lemmaflow::parse::parse_network;
use lemmaflow::prover::ResourceLimits;

/// Status code of a C API call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LfStatus {
    LfOk = 0,
    LfNullArgument = 1,
    LfInvalidUtf8 = 2,
    LfParseError = 3,
    LfPlanError = 4,
    LfInvalidArgument = 5,
    LfInternalError = 6,
}

/// Search budgets for proving. All fields must be positive.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct LfLimits {
    pub max_clauses: u64,
    pub max_depth: u64,
    pub timeout_ms: u64,
}

/// A parsed and validated agent network (opaque).
pub struct LfNetwork(AgentNetwork);

/// The composed result of a lemma-flow proving run (opaque).
pub struct LfProof(LemmaFlowProof);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " "))
        .unwrap_or_else(|_| CString::new("error").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn guarded<F: FnOnce() -> LfStatus>(body: F) -> LfStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic".to_string());
            LfStatus::LfInternalError
        }
    }
}

fn string_out(text: String, out: *mut *mut c_char) -> LfStatus {
    let c = match CString::new(text) {
        Ok(c) => c,
        Err(_) => {
            set_error("output contained an interior NUL byte".into());
            return LfStatus::LfInternalError;
        }
    };
    unsafe { *out = c.into_raw() };
    LfStatus::LfOk
}

/// Version of the library, as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn lf_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr() as *const c_char
}

/// Message of the last failure on the calling thread, or NULL if none.
/// The pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn lf_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map(|s| s.as_ptr())
            .unwrap_or(ptr::null())
    })
}

/// Parse and validate an agent network from NUL-terminated source text.
/// On success stores a handle in `out`; free it with `lf_network_free`.
///
/// # Safety
/// `src` must point to a NUL-terminated string and `out` to writable
/// pointer storage.
#[no_mangle]
pub unsafe extern "C" fn lf_network_parse(
    src: *const c_char,
    out: *mut *mut LfNetwork,
) -> LfStatus {
    guarded(|| {
        if src.is_null() || out.is_null() {
            set_error("null argument".into());
            return LfStatus::LfNullArgument;
        }
        let text = match unsafe { CStr::from_ptr(src) }.to_str() {
            Ok(t) => t,
            Err(_) => {
                set_error("source is not valid UTF-8".into());
                return LfStatus::LfInvalidUtf8;
            }
        };
        match parse_network(text) {
            Ok(net) => {
                unsafe { *out = Box::into_raw(Box::new(LfNetwork(net))) };
                LfStatus::LfOk
            }
            Err(e) => {
                set_error(e.to_string());
                LfStatus::LfParseError
            }
        }
    })
}

/// Release a network handle. NULL is ignored.
///
/// # Safety
/// `net` must be NULL or a pointer obtained from `lf_network_parse`.
#[no_mangle]
pub unsafe extern "C" fn lf_network_free(net: *mut LfNetwork) {
    if !net.is_null() {
        drop(unsafe { Box::from_raw(net) });
    }
}

/// Number of agents in the network; zero if `net` is NULL.
///
/// # Safety
/// `net` must be NULL or a live network handle.
#[no_mangle]
pub unsafe extern "C" fn lf_network_agent_count(net: *const LfNetwork) -> usize {
    if net.is_null() {
        return 0;
    }
    unsafe { &*net }.0.agents.len()
}

/// Total number of knowledgebase entries across all agents.
///
/// # Safety
/// `net` must be NULL or a live network handle.
#[no_mangle]
pub unsafe extern "C" fn lf_network_entry_count(net: *const LfNetwork) -> usize {
    if net.is_null() {
        return 0;
    }
    unsafe { &*net }
        .0
        .agents
        .iter()
        .map(|a| a.entries.len())
        .sum()
}

/// Render the network in canonical text form.
///
/// # Safety
/// `net` must be a live network handle and `out` writable pointer storage.
#[no_mangle]
pub unsafe extern "C" fn lf_network_render(
    net: *const LfNetwork,
    out: *mut *mut c_char,
) -> LfStatus {
    guarded(|| {
        if net.is_null() || out.is_null() {
            set_error("null argument".into());
            return LfStatus::LfNullArgument;
        }
        string_out(unsafe { &*net }.0.render(), out)
    })
}

/// One-line summary of the network and its lemma plan: agent count, entry
/// count, lemma task count and execution order.
///
/// # Safety
/// `net` must be a live network handle and `out` writable pointer storage.
#[no_mangle]
pub unsafe extern "C" fn lf_check_summary(
    net: *const LfNetwork,
    out: *mut *mut c_char,
) -> LfStatus {
    guarded(|| {
        if net.is_null() || out.is_null() {
            set_error("null argument".into());
            return LfStatus::LfNullArgument;
        }
        let network = &unsafe { &*net }.0;
        let the_plan = match plan(network) {
            Ok(p) => p,
            Err(e) => {
                set_error(e.to_string());
                return LfStatus::LfPlanError;
            }
        };
        let entries: usize = network.agents.iter().map(|a| a.entries.len()).sum();
        string_out(
            format!(
                "{} agents, {} entries, {} lemma tasks, order: [{}]",
                network.agents.len(),
                entries,
                the_plan.tasks.len(),
                the_plan.order().join(", ")
            ),
            out,
        )
    })
}

/// The default search budgets.
#[no_mangle]
pub extern "C" fn lf_limits_default() -> LfLimits {
    let d = ResourceLimits::default();
    LfLimits {
        max_clauses: d.max_clauses as u64,
        max_depth: d.max_depth as u64,
        timeout_ms: d.max_millis,
    }
}

/// Prove the network's query via lemma flow. `limits` may be NULL for the
/// defaults; `jobs` is the number of concurrent prover tasks (0 means 1).
/// On success stores a proof handle in `out`; free it with `lf_proof_free`.
/// The call succeeds even when the goal is not proved; inspect the proof.
///
/// # Safety
/// `net` must be a live network handle, `limits` NULL or valid, and `out`
/// writable pointer storage.
#[no_mangle]
pub unsafe extern "C" fn lf_prove(
    net: *const LfNetwork,
    limits: *const LfLimits,
    jobs: u32,
    out: *mut *mut LfProof,
) -> LfStatus {
    guarded(|| {
        if net.is_null() || out.is_null() {
            set_error("null argument".into());
            return LfStatus::LfNullArgument;
        }
        let network = &unsafe { &*net }.0;
        let limits = if limits.is_null() {
            ResourceLimits::default()
        } else {
            let l = unsafe { &*limits };
            if l.max_clauses == 0 || l.max_depth == 0 || l.timeout_ms == 0 {
                set_error("limits must be positive".into());
                return LfStatus::LfInvalidArgument;
            }
            ResourceLimits {
                max_clauses: l.max_clauses as usize,
                max_depth: l.max_depth as usize,
                max_millis: l.timeout_ms,
            }
        };
        let the_plan = match plan(network) {
            Ok(p) => p,
            Err(e) => {
                set_error(e.to_string());
                return LfStatus::LfPlanError;
            }
        };
        let proof = discharge(network, &the_plan, &limits, jobs.max(1) as usize);
        unsafe { *out = Box::into_raw(Box::new(LfProof(proof))) };
        LfStatus::LfOk
    })
}

/// Release a proof handle. NULL is ignored.
///
/// # Safety
/// `proof` must be NULL or a pointer obtained from `lf_prove`.
#[no_mangle]
pub unsafe extern "C" fn lf_proof_free(proof: *mut LfProof) {
    if !proof.is_null() {
        drop(unsafe { Box::from_raw(proof) });
    }
}

/// True iff the root and every lemma were proved.
///
/// # Safety
/// `proof` must be NULL or a live proof handle.
#[no_mangle]
pub unsafe extern "C" fn lf_proof_is_proved(proof: *const LfProof) -> bool {
    if proof.is_null() {
        return false;
    }
    unsafe { &*proof }.0.proved()
}

/// Number of tasks in the run, the root included.
///
/// # Safety
/// `proof` must be NULL or a live proof handle.
#[no_mangle]
pub unsafe extern "C" fn lf_proof_task_count(proof: *const LfProof) -> usize {
    if proof.is_null() {
        return 0;
    }
    unsafe { &*proof }.0.lemmas.len() + 1
}

/// Render the per-task report, optionally with full proof traces.
///
/// # Safety
/// `proof` must be a live proof handle and `out` writable pointer storage.
#[no_mangle]
pub unsafe extern "C" fn lf_proof_report(
    proof: *const LfProof,
    full_trace: bool,
    out: *mut *mut c_char,
) -> LfStatus {
    guarded(|| {
        if proof.is_null() || out.is_null() {
            set_error("null argument".into());
            return LfStatus::LfNullArgument;
        }
        string_out(unsafe { &*proof }.0.render_report(full_trace), out)
    })
}

/// Render the network's lemma flow diagram in DOT format.
///
/// # Safety
/// `net` must be a live network handle and `out` writable pointer storage.
#[no_mangle]
pub unsafe extern "C" fn lf_diagram_dot(
    net: *const LfNetwork,
    out: *mut *mut c_char,
) -> LfStatus {
    guarded(|| {
        if net.is_null() || out.is_null() {
            set_error("null argument".into());
            return LfStatus::LfNullArgument;
        }
        let network = &unsafe { &*net }.0;
        match build_diagram(network) {
            Ok(d) => string_out(emit_dot(&d), out),
            Err(e) => {
                set_error(e.to_string());
                LfStatus::LfInternalError
            }
        }
    })
}

/// Release a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string pointer returned by this library.
#[no_mangle]
pub unsafe extern "C" fn lf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
