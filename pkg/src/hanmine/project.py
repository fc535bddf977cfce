"""Project persistence: corpora registrations, keyword sets, analysis knobs.

A project is a single JSON document.  Saves go through a temp file plus
rename so a crash never leaves a half-written project, and re-saving an
unchanged project is byte-stable.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from hanmine.collocations import DEFAULT_WINDOW
from hanmine.corpus import NormalizationPolicy
from hanmine.trends import DEFAULT_LAMBDA, KeywordSet

SCHEMA_VERSION = 1


class ProjectError(ValueError):
    """Raised when a project file cannot be loaded or is inconsistent."""


@dataclass(frozen=True)
class CorpusRef:
    manifest: str
    policy: NormalizationPolicy = NormalizationPolicy()


@dataclass(frozen=True)
class AnalysisConfig:
    lam: float = DEFAULT_LAMBDA
    windows: tuple[int, ...] = (10, 20, DEFAULT_WINDOW)
    ranking_scheme: str = "tf_sum"


@dataclass(frozen=True)
class Project:
    name: str
    corpora: dict[str, CorpusRef] = field(default_factory=dict)
    keyword_sets: dict[str, KeywordSet] = field(default_factory=dict)
    config: AnalysisConfig = AnalysisConfig()
    schema_version: int = SCHEMA_VERSION


def _policy_to_dict(p: NormalizationPolicy) -> dict:
    return {
        "strip_whitespace": p.strip_whitespace,
        "strip_ascii": p.strip_ascii,
        "strip_cjk_punctuation": p.strip_cjk_punctuation,
        "custom_keep": sorted(p.custom_keep),
        "custom_drop": sorted(p.custom_drop),
    }


def _policy_from_dict(d: dict) -> NormalizationPolicy:
    return NormalizationPolicy(
        strip_whitespace=bool(d.get("strip_whitespace", True)),
        strip_ascii=bool(d.get("strip_ascii", True)),
        strip_cjk_punctuation=bool(d.get("strip_cjk_punctuation", True)),
        custom_keep=frozenset(d.get("custom_keep", ())),
        custom_drop=frozenset(d.get("custom_drop", ())),
    )


def project_to_dict(project: Project) -> dict:
    return {
        "schema_version": project.schema_version,
        "name": project.name,
        "corpora": {
            name: {"manifest": ref.manifest, "policy": _policy_to_dict(ref.policy)}
            for name, ref in sorted(project.corpora.items())
        },
        "keyword_sets": {
            name: {"keywords": list(ks.keywords), "notes": dict(sorted(ks.notes.items()))}
            for name, ks in sorted(project.keyword_sets.items())
        },
        "config": {
            "lambda": project.config.lam,
            "windows": list(project.config.windows),
            "ranking_scheme": project.config.ranking_scheme,
        },
    }


def project_from_dict(data: dict, path: str = "<memory>") -> Project:
    if not isinstance(data, dict):
        raise ProjectError(f"{path}: project file is not a JSON object")
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ProjectError(
            f"{path}: schema version {version!r} needs migration (expected {SCHEMA_VERSION})"
        )
    try:
        corpora = {
            name: CorpusRef(
                manifest=str(ref["manifest"]),
                policy=_policy_from_dict(ref.get("policy", {})),
            )
            for name, ref in data.get("corpora", {}).items()
        }
        keyword_sets = {
            name: KeywordSet(
                name=name,
                keywords=tuple(ks["keywords"]),
                notes=dict(ks.get("notes", {})),
            )
            for name, ks in data.get("keyword_sets", {}).items()
        }
        cfg = data.get("config", {})
        config = AnalysisConfig(
            lam=float(cfg.get("lambda", DEFAULT_LAMBDA)),
            windows=tuple(int(w) for w in cfg.get("windows", (10, 20, DEFAULT_WINDOW))),
            ranking_scheme=str(cfg.get("ranking_scheme", "tf_sum")),
        )
        return Project(
            name=str(data.get("name", "")),
            corpora=corpora,
            keyword_sets=keyword_sets,
            config=config,
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ProjectError):
            raise
        raise ProjectError(f"{path}: malformed project data: {exc}") from exc


def save_project(project: Project, path: str | Path) -> None:
    path = Path(path)
    payload = json.dumps(
        project_to_dict(project), ensure_ascii=False, indent=2, sort_keys=True
    )
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_project(path: str | Path, check_corpora: bool = True) -> Project:
    path = Path(path)
    if not path.is_file():
        raise ProjectError(f"project file not found: {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ProjectError(f"{path}: not valid JSON: {exc}") from exc
    project = project_from_dict(data, str(path))
    if check_corpora:
        for name, ref in project.corpora.items():
            manifest = Path(ref.manifest)
            if not manifest.is_absolute():
                manifest = path.parent / manifest
            if not manifest.is_file():
                raise ProjectError(
                    f"{path}: corpus {name!r} references missing manifest {manifest}"
                )
    return project
