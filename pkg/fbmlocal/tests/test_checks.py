# -*- coding: utf-8 -*-

"""
fbmlocal is a numerical toolkit for local independence of fractional
Brownian motion.
Copyright (C) 2014, the fbmlocal developers

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program. If not, <see http://www.gnu.org/licenses/>.
"""

import io
import os
import json
import shutil
import tempfile
import unittest
from fbmlocal import checks, cli, widgets
from fbmlocal.exceptions import ValidationError

class CheckTest( unittest.TestCase ):

    def testPassed( self ):
        self.assertTrue( checks.Check( 'routes', 'x', 1.05, 1.0, 0.1 ).passed )
        self.assertFalse( checks.Check( 'routes', 'x', 1.2, 1.0, 0.1 ).passed )
        self.assertFalse( checks.Check( 'routes', 'x', None, 1.0, 10.0 ).passed )

    def testFlaggedNeverPasses( self ):
        check = checks.Check( 'sobolev', 'x', 1.0, 1.0, 0.1, message = 'moved', flagged = True )
        self.assertFalse( check.passed )
        self.assertTrue( check.getData()['flagged'] )

    def testDualNormPairs( self ):
        self.assertIn( ( 1.5, -0.25 ), checks.DUAL_NORM_PAIRS )
        self.assertIn( ( 2.0, 0.25 ), checks.DUAL_NORM_PAIRS )

    def testSuite( self ):
        suite = checks.CheckSuite([ 
            checks.Check( 'a', 'first', 0.0, 0.0, 0.0 ),
            checks.Check( 'b', 'second', 2.0, 0.0, 1.0, message = 'off' )
        ])

        self.assertFalse( suite.isPassed() )
        self.assertEqual( len( suite ), 2 )
        self.assertEqual( [ c.name for c in suite.getFailed() ], [ 'second' ] )
        self.assertEqual( suite.getData()['checks'][1]['message'], 'off' )

        text = widgets.CheckReport().render( suite )
        self.assertIn( 'FAIL b/second', text )
        self.assertTrue( text.endswith( '1 passed, 1 failed' ) )

    def testUnknownFamily( self ):
        with self.assertRaises( ValidationError ):
            checks.checkAll([ 'routes', 'theorem' ])

    def testRouteFamily( self ):
        suite = checks.checkAll([ 'routes' ])
        self.assertTrue( suite.isPassed() )
        self.assertEqual( suite.config['only'], [ 'routes' ] )

    def testRateAndIdentityFamilies( self ):
        only = [ 'thm22', 'complement', 'sobolev', 'sampler' ]
        suite = checks.checkAll( only )

        self.assertEqual( [ c.name for c in suite.getFailed() ], [] )
        self.assertEqual( sorted( set( c.family for c in suite ) ), sorted( only ) )

        names = [ c.name for c in suite if c.family == 'sobolev' ]
        self.assertIn( 'dual norm alpha=1.5 s=-0.25', names )
        self.assertIn( 'dual norm alpha=2.0 s=0.25', names )
        self.assertFalse( any( c.flagged for c in suite ) )

    def testFamilyOrder( self ):
        self.assertEqual( list( checks.FAMILIES )[:3], [ 'thm21', 'thm22', 'complement' ] )

    def testBrownianAndInvariance( self ):
        suite = checks.checkAll([ 'brownian', 'invariance' ])
        self.assertTrue( suite.isPassed() )

        names = [ c.name for c in suite ]
        for table in ( 'complement', 'halfline', 'past', 'scan' ):
            self.assertIn( '{} max mi'.format( table ), names )

        self.assertIn( 'swap spectrum', names )

class CheckCommandTest( unittest.TestCase ):

    def setUp( self ):
        self.directory = tempfile.mkdtemp()

    def tearDown( self ):
        shutil.rmtree( self.directory )

    def testReport( self ):
        path = os.path.join( self.directory, 'checks.json' )
        stdout, stderr = io.StringIO(), io.StringIO()
        status = cli.run([ 'check-all', '--only', 'routes', '--json', path ], stdout, stderr )

        self.assertEqual( status, cli.SUCCESS )
        self.assertTrue( stdout.getvalue().strip().endswith( '1 passed, 0 failed' ) )

        with open( path ) as stream:
            data = json.load( stream )

        self.assertTrue( data['passed'] )
        self.assertEqual( data['config']['only'], 'routes' )

    def testUnknownFamily( self ):
        stdout, stderr = io.StringIO(), io.StringIO()
        status = cli.run([ 'check-all', '--only', 'nothing' ], stdout, stderr )
        self.assertEqual( status, cli.VALIDATION_ERROR )

if __name__ == '__main__':
    unittest.main()
