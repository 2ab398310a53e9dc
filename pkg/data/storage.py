import json
import os
import time
from dataclasses import dataclass, asdict
from typing import Optional

import config as cfg
from gems import log
from gems.graph import ColoredGraph

from .formats import serialize_gem


@dataclass
class Discrepancy:
    kind: str
    detail: str
    gem: Optional[str] = None  # gem file text of the offending graph
    timestamp: str = ''


class DiscrepancyStore:
    def __init__(self, path: str | None = None):
        self.path = path if path is not None else cfg.DISCREPANCY_FILE
        self.records: list[Discrepancy] = []
        self._load()

    def _load(self):
        if not self.path or not os.path.exists(self.path):
            return
        try:
            with open(self.path, 'r') as f:
                data = json.load(f)

            for record in data.get('discrepancies', []):
                self.records.append(Discrepancy(**record))
        except Exception as e:
            log.log_message(f'Failed to load discrepancies: {e}')

    def _save(self):
        if not self.path:
            return
        data = {'discrepancies': [asdict(record) for record in self.records]}
        with open(self.path, 'w') as f:
            json.dump(data, f, indent=2)

    def add(self, kind: str, detail: str, graph: ColoredGraph | None = None) -> Discrepancy:
        record = Discrepancy(
            kind=kind,
            detail=detail,
            gem=serialize_gem(graph) if graph is not None else None,
            timestamp=time.strftime('%Y-%m-%d %H:%M:%S')
        )
        self.records.append(record)
        self._save()
        return record

    def register(self):
        """Collect every discrepancy reported by the library from now on."""
        if self.add not in log.discrepancy_sinks:
            log.discrepancy_sinks.append(self.add)

    def unregister(self):
        if self.add in log.discrepancy_sinks:
            log.discrepancy_sinks.remove(self.add)

    def by_kind(self, kind: str) -> list[Discrepancy]:
        return [r for r in self.records if r.kind == kind]
