_criteria = {}


def pytest_runtest_logreport(report):
    if report.when == 'call' or (report.when == 'setup' and report.failed):
        name = report.nodeid.rsplit('::', 1)[-1]
        if name.startswith('test_criterion_'):
            _criteria[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section('acceptance criteria')
    for name in sorted(_criteria):
        status = 'PASS' if _criteria[name] == 'passed' else 'FAIL'
        number = int(name.split('_')[2])
        label = name.split('_', 3)[3].replace('_', ' ')
        terminalreporter.write_line(f'criterion {number:2d} {status}  {label}')
