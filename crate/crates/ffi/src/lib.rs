//! C interface to the admissible crate.
//!
//! Games, type structures and LPS's live behind opaque handles. Every call
//! returns an `AdmStatus`; on failure `adm_last_error` describes what went
//! wrong. Results are JSON strings owned by the caller and released with
//! `adm_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use admissible::cli::{self, Mode, Notion};
use admissible::dominance::SasOptions;
use admissible::epistemic::{self, TypeStructure};
use admissible::game::Game;
use admissible::lps::Lps;
use admissible::{verify, Error};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdmStatus {
    Ok = 0,
    /// Malformed document or argument.
    Invalid = 1,
    /// Well-formed input outside the operation's domain.
    Precondition = 2,
    /// A computed result failed its own check.
    Internal = 3,
    Io = 4,
    NullArgument = 5,
    /// A Rust panic was caught at the boundary.
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdmMode {
    /// Rationality and common cautious belief of rationality.
    Rcbr = 0,
    /// Rationality and common certain belief, inside transparency of cautiousness.
    Rhat = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdmNotion {
    Cautious = 0,
    Weak = 1,
    Certain = 2,
    WeakAssumption = 3,
    Full = 4,
}

pub struct AdmGame(Game);

pub struct AdmStructure(TypeStructure);

pub struct AdmLps(Lps);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> AdmStatus {
    match e {
        Error::Invalid(_) | Error::Json(_) => AdmStatus::Invalid,
        Error::Precondition(_) => AdmStatus::Precondition,
        Error::Internal(_) => AdmStatus::Internal,
        Error::Io { .. } => AdmStatus::Io,
    }
}

enum Fail {
    Lib(Error),
    Null(&'static str),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

/// Runs `f`, recording its error and turning panics into `Panic`.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> AdmStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AdmStatus::Ok,
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("{what} is null"));
            AdmStatus::NullArgument
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            set_error(format!("panic: {msg}"));
            AdmStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Lib(Error::invalid(format!("{what} is not UTF-8"))))
}

unsafe fn handle<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Null(what))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_json(out: *mut *mut c_char, v: &serde_json::Value) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null("output pointer"));
    }
    let s = serde_json::to_string(v).expect("serializable");
    *out = CString::new(s).expect("JSON has no nul").into_raw();
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn adm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn adm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn adm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a game document.
///
/// # Safety
/// `json` is a nul-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn adm_game_from_json(json: *const c_char, out: *mut *mut AdmGame) -> AdmStatus {
    guard(|| put(out, AdmGame(Game::from_json_str(text(json, "json")?)?)))
}

/// # Safety
/// `path` is a nul-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn adm_game_load(path: *const c_char, out: *mut *mut AdmGame) -> AdmStatus {
    guard(|| put(out, AdmGame(Game::load(text(path, "path")?)?)))
}

/// # Safety
/// `game` comes from this library (or is NULL) and is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn adm_game_free(game: *mut AdmGame) {
    if !game.is_null() {
        drop(Box::from_raw(game));
    }
}

/// # Safety
/// `game` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn adm_game_num_strategies(game: *const AdmGame, player: usize, out: *mut usize) -> AdmStatus {
    guard(|| {
        let g = &handle(game, "game")?.0;
        if player >= g.num_players() {
            return Err(Error::invalid(format!("no player {player}")).into());
        }
        if out.is_null() {
            return Err(Fail::Null("output pointer"));
        }
        *out = g.num_strategies(player);
        Ok(())
    })
}

/// Iterated admissibility rounds, limit and elimination witnesses.
///
/// # Safety
/// `game` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn adm_game_ia(game: *const AdmGame, out: *mut *mut c_char) -> AdmStatus {
    guard(|| put_json(out, &cli::ia(&handle(game, "game")?.0)?.json))
}

/// All self-admissible sets. `force` lifts the size guard.
///
/// # Safety
/// `game` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn adm_game_sas_enumerate(game: *const AdmGame, force: bool, out: *mut *mut c_char) -> AdmStatus {
    guard(|| {
        let opts = SasOptions {
            force,
            ..SasOptions::default()
        };
        put_json(out, &cli::sas_enumerate(&handle(game, "game")?.0, &opts)?.json)
    })
}

/// Checks a set written like `a=u;b=l,r`.
///
/// # Safety
/// `game` is a live handle; `set` is a nul-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn adm_game_sas_check(
    game: *const AdmGame,
    set: *const c_char,
    out: *mut *mut c_char,
) -> AdmStatus {
    guard(|| {
        let g = &handle(game, "game")?.0;
        let q = g.parse_product(text(set, "set")?)?;
        put_json(out, &cli::sas_check(g, &q)?.json)
    })
}

/// Lexicographic rationalizability rounds with witness LPS's.
///
/// # Safety
/// `game` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn adm_game_stahl(game: *const AdmGame, out: *mut *mut c_char) -> AdmStatus {
    guard(|| put_json(out, &cli::stahl(&handle(game, "game")?.0)?.json))
}

/// Parses a structure document; the game must be inline.
///
/// # Safety
/// `json` is a nul-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn adm_structure_from_json(json: *const c_char, out: *mut *mut AdmStructure) -> AdmStatus {
    guard(|| {
        let v: serde_json::Value = serde_json::from_str(text(json, "json")?).map_err(Error::from)?;
        put(out, AdmStructure(TypeStructure::from_json(&v, None)?))
    })
}

/// Loads a structure file; a game given as a path is resolved next to it.
///
/// # Safety
/// `path` is a nul-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn adm_structure_load(path: *const c_char, out: *mut *mut AdmStructure) -> AdmStatus {
    guard(|| put(out, AdmStructure(TypeStructure::load(text(path, "path")?)?)))
}

/// The structure whose rounds of R^m project onto the admissibility rounds.
///
/// # Safety
/// `game` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn adm_structure_build_lemma1(game: *const AdmGame, out: *mut *mut AdmStructure) -> AdmStatus {
    guard(|| {
        put(
            out,
            AdmStructure(epistemic::build_lemma1_structure(&handle(game, "game")?.0)?),
        )
    })
}

/// A structure realizing the self-admissible set `set` (`a=u;b=l,r`).
///
/// # Safety
/// `game` is a live handle; `set` is a nul-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn adm_structure_build_sas(
    game: *const AdmGame,
    set: *const c_char,
    out: *mut *mut AdmStructure,
) -> AdmStatus {
    guard(|| {
        let g = &handle(game, "game")?.0;
        let q = g.parse_product(text(set, "set")?)?;
        put(out, AdmStructure(epistemic::build_sas_structure(g, &q)?))
    })
}

/// # Safety
/// `ts` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn adm_structure_to_json(ts: *const AdmStructure, out: *mut *mut c_char) -> AdmStatus {
    guard(|| put_json(out, &handle(ts, "structure")?.0.to_json()))
}

/// Event hierarchy to its fixpoint.
///
/// # Safety
/// `ts` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn adm_structure_iterate(
    ts: *const AdmStructure,
    mode: AdmMode,
    out: *mut *mut c_char,
) -> AdmStatus {
    guard(|| {
        let mode = match mode {
            AdmMode::Rcbr => Mode::Rcbr,
            AdmMode::Rhat => Mode::Rhat,
        };
        put_json(out, &cli::iterate(&handle(ts, "structure")?.0, mode, None)?.json)
    })
}

/// # Safety
/// `ts` comes from this library (or is NULL) and is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn adm_structure_free(ts: *mut AdmStructure) {
    if !ts.is_null() {
        drop(Box::from_raw(ts));
    }
}

/// Parses `{"space": [[s, t], ...], "levels": [[...], ...]}`.
///
/// # Safety
/// `json` is a nul-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn adm_lps_from_json(json: *const c_char, out: *mut *mut AdmLps) -> AdmStatus {
    guard(|| {
        let v: serde_json::Value = serde_json::from_str(text(json, "json")?).map_err(Error::from)?;
        put(out, AdmLps(Lps::from_json(&v)?))
    })
}

/// Evaluates a belief notion on an event written as `s1|t;s2` (a bare
/// strategy stands for all its atoms).
///
/// # Safety
/// `lps` is a live handle; `event` is a nul-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn adm_lps_check(
    lps: *const AdmLps,
    event: *const c_char,
    notion: AdmNotion,
    out: *mut *mut c_char,
) -> AdmStatus {
    guard(|| {
        let mu = &handle(lps, "lps")?.0;
        let e = cli::parse_event(mu, text(event, "event")?)?;
        let notion = match notion {
            AdmNotion::Cautious => Notion::Cautious,
            AdmNotion::Weak => Notion::Weak,
            AdmNotion::Certain => Notion::Certain,
            AdmNotion::WeakAssumption => Notion::WeakAssumption,
            AdmNotion::Full => Notion::Full,
        };
        put_json(out, &cli::lps_check(mu, &e, notion)?.json)
    })
}

/// # Safety
/// `lps` comes from this library (or is NULL) and is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn adm_lps_free(lps: *mut AdmLps) {
    if !lps.is_null() {
        drop(Box::from_raw(lps));
    }
}

/// Re-runs the bundled worked instances. Succeeds even when some fail; the
/// per-item status is in the JSON.
///
/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn adm_verify(seed: u64, out: *mut *mut c_char) -> AdmStatus {
    guard(|| {
        let items: Vec<serde_json::Value> = verify::run_all(seed)
            .iter()
            .map(|it| serde_json::json!({"name": it.name, "status": it.status.as_str(), "detail": it.detail}))
            .collect();
        put_json(out, &serde_json::json!({"seed": seed, "items": items}))
    })
}
