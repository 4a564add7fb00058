# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import logging
from functools import partial
from typing import Dict, List, Type
from unittest.mock import Mock

from torchvortex.framework.callback import Callback
from torchvortex.framework.state import State
from torchvortex.framework.unit import TSolverUnit

logger: logging.Logger = logging.getLogger(__name__)

_CALLBACK_HOOKS = (
    "on_exception",
    "on_solve_start",
    "on_stage_start",
    "on_step_start",
    "on_step_end",
    "on_stage_end",
    "on_solve_end",
)


def _has_method_override(method_name: str, instance: object, base_class: Type[object]) -> bool:
    """
    Checks if a class instance overrides a specific method from a particular base class.
    """
    if isinstance(instance, Mock):
        # Mocks implement every hook
        return True
    instance_method = getattr(instance, method_name, None)
    if instance_method is None:
        return False
    base_method = getattr(base_class, method_name, None)
    if hasattr(instance_method, "__wrapped__"):
        instance_method = instance_method.__wrapped__
    if isinstance(instance_method, partial):
        instance_method = instance_method.func
    return instance_method.__code__ != base_method.__code__


def _get_implemented_callback_mapping(callbacks: List[Callback]) -> Dict[str, List[Callback]]:
    """
    Maps each hook to the callbacks that implement it, keeping the callbacks' order.

    Hooks left as the no-op base implementation are skipped, so a per-step hook costs nothing when
    no callback uses it.
    """
    cb_overrides: Dict[str, List[Callback]] = {}
    for hook in _CALLBACK_HOOKS:
        for cb in callbacks:
            if _has_method_override(hook, cb, Callback):
                cb_overrides.setdefault(hook, []).append(cb)
    return cb_overrides


class CallbackHandler:
    """
    Runs the callbacks of a solve loop.
    """

    def __init__(self, callbacks: List[Callback]) -> None:
        self._callbacks: Dict[str, List[Callback]] = _get_implemented_callback_mapping(callbacks)

    def on_exception(self, state: State, unit: TSolverUnit, exc: BaseException) -> None:
        for cb in self._callbacks.get("on_exception", []):
            cb.on_exception(state, unit, exc)

    def on_solve_start(self, state: State, unit: TSolverUnit) -> None:
        for cb in self._callbacks.get("on_solve_start", []):
            cb.on_solve_start(state, unit)

    def on_stage_start(self, state: State, unit: TSolverUnit) -> None:
        for cb in self._callbacks.get("on_stage_start", []):
            cb.on_stage_start(state, unit)

    def on_step_start(self, state: State, unit: TSolverUnit) -> None:
        for cb in self._callbacks.get("on_step_start", []):
            cb.on_step_start(state, unit)

    def on_step_end(self, state: State, unit: TSolverUnit) -> None:
        for cb in self._callbacks.get("on_step_end", []):
            cb.on_step_end(state, unit)

    def on_stage_end(self, state: State, unit: TSolverUnit) -> None:
        for cb in self._callbacks.get("on_stage_end", []):
            cb.on_stage_end(state, unit)

    def on_solve_end(self, state: State, unit: TSolverUnit) -> None:
        for cb in self._callbacks.get("on_solve_end", []):
            cb.on_solve_end(state, unit)
