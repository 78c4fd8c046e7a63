# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Builds the ``submax._submax`` extension through the project's CMake tree.

The CMake target writes the module into ``python/submax``, which is also the
package directory, so editable installs import it with no extra copying; a
regular wheel build copies it into the build tree afterwards.
"""

import glob
import os
import shutil
import subprocess
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

SOURCE_DIR = os.path.abspath(os.path.dirname(__file__))


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        build_dir = os.path.join(SOURCE_DIR, "build", "python")
        os.makedirs(build_dir, exist_ok=True)
        subprocess.check_call(
            [
                "cmake",
                "-S",
                SOURCE_DIR,
                "-B",
                build_dir,
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ]
        )
        subprocess.check_call(
            ["cmake", "--build", build_dir, "--target", "_submax", "--parallel"]
        )

        built = glob.glob(os.path.join(SOURCE_DIR, "python", "submax", "_submax*.so"))
        built += glob.glob(os.path.join(SOURCE_DIR, "python", "submax", "_submax*.pyd"))
        if not built:
            raise RuntimeError("CMake did not produce the _submax module")
        target = self.get_ext_fullpath(ext.name)
        os.makedirs(os.path.dirname(target), exist_ok=True)
        shutil.copyfile(built[0], target)


setup(
    ext_modules=[CMakeExtension("submax._submax")],
    cmdclass={"build_ext": CMakeBuild},
)
