def pytest_terminal_summary(terminalreporter):
    from repstab.verify import ACCEPTANCE

    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k, (title, _) in enumerate(ACCEPTANCE, 1):
        if k in RESULTS:
            status = "PASS" if RESULTS[k] else "FAIL"
            terminalreporter.write_line(f"{status} criterion {k}: {title}")
