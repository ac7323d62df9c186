# Copyright 2026 tribolab contributors
#
# All Rights Reserved.
#
#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.
from setuptools import setup, find_packages

_description = 'Exact-arithmetic engine and identity verification harness for Tribonacci and l-step sequences'

setup(
    name='tribolab',
    version='1.0.0',
    author='tribolab contributors',
    packages=find_packages(),
    include_package_data=True,
    description=_description,
    license='Apache 2',
    python_requires='>=3.8',
    install_requires=[
        'Click', 'prettytable', 'pyyaml', 'verboselogs'
    ],
    test_suite='nose.collector',
    entry_points={
        'console_scripts': [
            'tribo = tribolab.scripts.tribo:cli',
        ],
    },
)
