"""
Core primitives: конечные поля, линейная алгебра, лимиты переборов,
модели отчётов и JSON-контракты.

Модули core не зависят от конкретных семейств кодов.
"""
