#  Copyright 2026 su23 contributors
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#   http://www.apache.org/licenses/LICENSE-2.0
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
import csv
import io
from typing import Iterable, List, Sequence

from jinja2 import Template

from su23.common.json_helper import JsonHelper
from su23.verify.check_result import STATUS_FAILED, STATUS_FINDING
from su23.verify.verify_report import MatrixReport

FORMAT_JSON = 'json'
FORMAT_TEXT = 'text'
FORMAT_CSV = 'csv'
FORMATS = (FORMAT_JSON, FORMAT_TEXT, FORMAT_CSV)

TEXT_TEMPLATE = Template("""\
{% for cell in cells -%}
{{ '%-12s' | format(cell.status | upper) }} n={{ cell.n }} q={{ cell.q }}\
{% if cell.case %} {{ cell.case.tag }}{% endif %}{% if cell.a is not none %} a={{ cell.a }}{% endif %}\
{% if cell.reason %}: {{ cell.reason }}{% endif %}
{% for check in cell.checkResults if check.status in highlighted -%}
    {{ check.status }} {{ check.suite }}/{{ check.name }}: {{ check.claim }}\
{% if check.witness %} {{ check.witness | tojson }}{% endif %}
{% endfor -%}
{% for error in cell.errors -%}
    {{ error.type }} {{ error.message }}{% if error.exception %}: {{ error.exception }}{% endif %}
{% endfor -%}
{% endfor -%}
{% for field in fields -%}
{{ '%-12s' | format('PASSED' if field.passed else 'FAILED') }} field q={{ field.q }}
{% for check in field.checkResults if check.status in highlighted -%}
    {{ check.status }} {{ check.name }}: {{ check.claim }}{% if check.witness %} {{ check.witness | tojson }}{% endif %}
{% endfor -%}
{% for error in field.errors -%}
    {{ error.type }} {{ error.message }}{% if error.exception %}: {{ error.exception }}{% endif %}
{% endfor -%}
{% endfor -%}
{% for certification in certifications -%}
{{ '%-12s' | format(certification.result.status if certification.result else 'ERROR') }} \
certify n={{ certification.n }} q={{ certification.q }}\
{% if certification.result %} order {{ certification.result.claimedOrder }} of {{ certification.result.expected }}\
{% if certification.result.reason %} ({{ certification.result.reason }}){% endif %}{% endif %}
{% for error in certification.errors -%}
    {{ error.type }} {{ error.message }}{% if error.exception %}: {{ error.exception }}{% endif %}
{% endfor -%}
{% endfor -%}
{% if counts %}Cells: {% for status, count in counts | dictsort %}{{ count }} {{ status }}{{ ', ' if not loop.last }}\
{% endfor %}
{% endif -%}
{{ 'All checks passed' if passed else 'Some checks failed' }}
""")

CSV_HEADER = ('n', 'q', 'suite', 'check', 'status', 'claim')


def render_text(report: MatrixReport) -> str:
    document = report.to_dict()
    return TEXT_TEMPLATE.render(cells=document['cells'],
                                fields=document['fields'],
                                certifications=document['certifications'],
                                counts=document['cellCounts'],
                                passed=document['passed'],
                                highlighted=(STATUS_FAILED, STATUS_FINDING))


def render_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def report_csv_rows(report: MatrixReport) -> List[tuple]:
    rows = []
    for cell in report.cells:
        for check in cell.check_results:
            rows.append((cell.n, cell.q, check.suite, check.name, check.status, check.claim))
    for field_report in report.fields:
        for check in field_report.check_results:
            rows.append(('', field_report.q, check.suite, check.name, check.status, check.claim))
    return rows


def render_report(report: MatrixReport, output_format: str, include_timings: bool = False) -> str:
    if output_format == FORMAT_TEXT:
        return render_text(report)
    if output_format == FORMAT_CSV:
        return render_csv(CSV_HEADER, report_csv_rows(report))
    return JsonHelper.to_json_pretty(report.to_dict(include_timings))
