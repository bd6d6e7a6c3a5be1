from attr import define, field
from kmk.artifacts import TableArtifact, TableRow
from kmk.lie import Weight
from kmk.tasks import BaseTask


@define
class KostkaTask(BaseTask):
    weight: Weight = field(kw_only=True)
    depth: int = field(kw_only=True)

    def run(self) -> TableArtifact:
        datum = self.structure.datum
        table = self.structure.kostka_engine.kostka_table(self.weight, self.depth)

        return TableArtifact(
            [TableRow(mu, datum.offset(self.weight, mu).coeffs, value) for mu, value in table.items()],
            name="kostka",
            weight=self.weight,
            depth=self.depth
        )
