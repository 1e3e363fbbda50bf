//! C interface to `chiefblock`.
//!
//! Groups are opaque `CbGroup` handles created by `cb_group_named` or
//! `cb_group_from_spec` and released with `cb_group_free`. Every fallible
//! call returns a `CbStatus`; on failure `cb_last_error` describes the error
//! raised most recently on the calling thread. Strings handed out by the
//! library are released with `cb_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::OnceLock;

use chiefblock::blocks::BlockPoset;
use chiefblock::cli::{analyze, parse_spec, render, AnalyzeOptions, GroupSpec};
use chiefblock::group::{FiniteGroup, DEFAULT_ELEMENT_CAP};
use chiefblock::lattice::{NormalLattice, DEFAULT_NODE_CAP};
use chiefblock::semisimple::components_in;
use chiefblock::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    UnknownName = 4,
    CapExceeded = 5,
    NotNormal = 6,
    Invariant = 7,
    Failed = 8,
    Panic = 9,
}

/// Opaque group handle.
pub struct CbGroup {
    name: String,
    group: FiniteGroup,
    lattice: OnceLock<NormalLattice>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> CbStatus {
    match e {
        Error::Parse { .. } | Error::BadAction(_) | Error::BadElement(_) | Error::InvalidPermutation(_) => {
            CbStatus::Parse
        }
        Error::UnknownName(_) => CbStatus::UnknownName,
        Error::CapExceeded { .. }
        | Error::NodeCapExceeded { .. }
        | Error::SearchCapExceeded { .. }
        | Error::OracleBoundExceeded { .. } => CbStatus::CapExceeded,
        Error::NotNormal(_) => CbStatus::NotNormal,
        Error::Invariant(_) | Error::ExtensionCheckFailed(_) => CbStatus::Invariant,
        _ => CbStatus::Failed,
    }
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guard<F: FnOnce() -> Result<(), CbStatus>>(f: F) -> CbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CbStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_last_error("panic inside chiefblock");
            CbStatus::Panic
        }
    }
}

fn fail(e: Error) -> CbStatus {
    set_last_error(&e.to_string());
    status_of(&e)
}

fn null(what: &str) -> CbStatus {
    set_last_error(&format!("null pointer: {what}"));
    CbStatus::NullPointer
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, CbStatus> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_last_error(&format!("{what} is not valid UTF-8"));
        CbStatus::InvalidUtf8
    })
}

unsafe fn handle<'a>(g: *const CbGroup) -> Result<&'a CbGroup, CbStatus> {
    g.as_ref().ok_or_else(|| null("group"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), CbStatus> {
    if out.is_null() {
        return Err(null("output"));
    }
    out.write(value);
    Ok(())
}

impl CbGroup {
    fn new(spec: &GroupSpec) -> Result<CbGroup, CbStatus> {
        let group = spec.build(DEFAULT_ELEMENT_CAP).map_err(fail)?;
        Ok(CbGroup {
            name: spec.describe(),
            group,
            lattice: OnceLock::new(),
        })
    }

    fn lattice(&self) -> Result<&NormalLattice, CbStatus> {
        if let Some(l) = self.lattice.get() {
            return Ok(l);
        }
        let l = NormalLattice::new(&self.group, DEFAULT_NODE_CAP).map_err(fail)?;
        Ok(self.lattice.get_or_init(|| l))
    }
}

unsafe fn create(spec: Result<GroupSpec, CbStatus>, out: *mut *mut CbGroup) -> Result<(), CbStatus> {
    if out.is_null() {
        return Err(null("output"));
    }
    *out = ptr::null_mut();
    let g = CbGroup::new(&spec?)?;
    *out = Box::into_raw(Box::new(g));
    Ok(())
}

/// Builds a built-in group such as `"A5"` or `"SL25"`.
///
/// # Safety
/// `name` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cb_group_named(name: *const c_char, out: *mut *mut CbGroup) -> CbStatus {
    guard(|| {
        let spec = read_str(name, "name").and_then(|n| {
            let s = GroupSpec::named(n);
            s.validate().map_err(fail)?;
            Ok(s)
        });
        create(spec, out)
    })
}

/// Builds a group from a JSON description.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cb_group_from_spec(json: *const c_char, out: *mut *mut CbGroup) -> CbStatus {
    guard(|| {
        let spec = read_str(json, "spec").and_then(|t| parse_spec(t).map_err(fail));
        create(spec, out)
    })
}

/// Releases a group handle. Null is ignored.
///
/// # Safety
/// `group` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cb_group_free(group: *mut CbGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cb_group_order(group: *const CbGroup, out: *mut usize) -> CbStatus {
    guard(|| write_out(out, handle(group)?.group.order()))
}

/// Number of normal subgroups.
///
/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cb_normal_subgroup_count(group: *const CbGroup, out: *mut usize) -> CbStatus {
    guard(|| write_out(out, handle(group)?.lattice()?.len()))
}

/// Number of distinct chief factors.
///
/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cb_chief_factor_count(group: *const CbGroup, out: *mut usize) -> CbStatus {
    guard(|| write_out(out, handle(group)?.lattice()?.chief_factor_indices().len()))
}

/// Number of chief series, counting at most `max_series`.
///
/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cb_chief_series_count(group: *const CbGroup, max_series: usize, out: *mut usize) -> CbStatus {
    guard(|| write_out(out, handle(group)?.lattice()?.chief_series_iter(max_series).count()))
}

/// Number of chief blocks.
///
/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cb_block_count(group: *const CbGroup, out: *mut usize) -> CbStatus {
    guard(|| {
        let poset = BlockPoset::new(handle(group)?.lattice()?).map_err(fail)?;
        write_out(out, poset.len())
    })
}

/// Number of components.
///
/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cb_component_count(group: *const CbGroup, out: *mut usize) -> CbStatus {
    guard(|| {
        let c = components_in(handle(group)?.lattice()?, DEFAULT_NODE_CAP).map_err(fail)?;
        write_out(out, c.len())
    })
}

/// The JSON analysis report (blocks and components included). Release the
/// string with `cb_string_free`.
///
/// # Safety
/// `group` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cb_analyze_json(group: *const CbGroup, out: *mut *mut c_char) -> CbStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output"));
        }
        *out = ptr::null_mut();
        let g = handle(group)?;
        let report = analyze(&g.group, &g.name, &AnalyzeOptions::default()).map_err(fail)?;
        let c = CString::new(render(&report)).map_err(|_| fail(Error::Invariant("nul in report".into())))?;
        *out = c.into_raw();
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Short name of a status code. The string is static.
#[no_mangle]
pub extern "C" fn cb_status_name(status: CbStatus) -> *const c_char {
    let s: &'static CStr = match status {
        CbStatus::Ok => c"ok",
        CbStatus::NullPointer => c"null pointer",
        CbStatus::InvalidUtf8 => c"invalid utf-8",
        CbStatus::Parse => c"parse error",
        CbStatus::UnknownName => c"unknown name",
        CbStatus::CapExceeded => c"cap exceeded",
        CbStatus::NotNormal => c"not normal",
        CbStatus::Invariant => c"invariant violated",
        CbStatus::Failed => c"failed",
        CbStatus::Panic => c"panic",
    };
    s.as_ptr()
}
