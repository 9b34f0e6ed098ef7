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

import unittest, os, shutil, tempfile, argparse
from fbmlocal import params, dialects, commands
from fbmlocal.params import types, validators as pv
from fbmlocal.runconfig import RunConfig, mergeSources
from fbmlocal.exceptions import TypeConversionError, ValidationError, ValidationCollectionError

class TypeTest( unittest.TestCase ):

    def testFloat( self ):
        self.assertEqual( types.Float().getValue( '1/4' ), 0.25 )
        self.assertEqual( types.Float().getValue( ' 2.5 ' ), 2.5 )
        self.assertEqual( types.Float().getValue( 3 ), 3.0 )
        self.assertIsNone( types.Float().getValue( '' ) )

        with self.assertRaises( TypeConversionError ):
            types.Float().getValue( 'abc' )

    def testInteger( self ):
        self.assertEqual( types.Integer().getValue( '1e5' ), 100000 )
        self.assertEqual( types.Integer().getValue( '64' ), 64 )

        with self.assertRaises( TypeConversionError ):
            types.Integer().getValue( '2.5' )

    def testBoolean( self ):
        self.assertTrue( types.Boolean().getValue( 'yes' ) )
        self.assertFalse( types.Boolean().getValue( 'off' ) )

        with self.assertRaises( TypeConversionError ):
            types.Boolean().getValue( 'maybe' )

    def testFloatList( self ):
        self.assertEqual( types.FloatList().getValue( '0, 1/2 3' ), [ 0.0, 0.5, 3.0 ] )
        self.assertEqual( types.FloatList().getValue([ 1, 2 ]), [ 1.0, 2.0 ] )

    def testGeometricSchedule( self ):
        schedule = types.Schedule()
        self.assertEqual( schedule.getValue( '0.125:0.015625:2' ), [ 0.125, 0.0625, 0.03125, 0.015625 ] )
        self.assertEqual( schedule.getValue( '0.125:0.015625:0.5' ), [ 0.125, 0.0625, 0.03125, 0.015625 ] )
        self.assertEqual( schedule.getValue( '4:32:2' ), [ 4.0, 8.0, 16.0, 32.0 ] )
        self.assertEqual( schedule.getValue( '0.5,0.25' ), [ 0.5, 0.25 ] )

        for text in ( '1:2', '1:2:1', '-1:2:2' ):
            with self.assertRaises( TypeConversionError ):
                schedule.getValue( text )

class ParameterTest( unittest.TestCase ):

    def testConversionErrorIsValidationError( self ):
        p = params.Real( name = 'eps', value = 'wide' )
        self.assertIsNone( p.getValue() )

        valid, errors = p.isValid()
        self.assertFalse( valid )
        self.assertEqual( errors[0][0], 'eps' )
        self.assertIn( "'wide'", errors[0][1] )

    def testHurst( self ):
        p = params.HurstIndex( name = 'H', value = 1.0 )
        self.assertEqual( p.isValid(), ( False, [ ( 'H', 'H must lie in the open interval (0, 1).' ) ] ) )

        p.setValue( '0.75' )
        self.assertEqual( p.isValid(), ( True, [] ) )

    def testOptionalNotChecked( self ):
        p = params.Real( name = 'alpha', validators = pv.Positive() )
        self.assertEqual( p.isValid(), ( True, [] ) )

        p = params.Real( name = 'alpha', required = True )
        self.assertFalse( p.isValid()[0] )

    def testSelect( self ):
        p = params.Select([ 'csv', 'json' ], name = 'format', value = 'xml' )
        valid, errors = p.isValid()
        self.assertFalse( valid )
        self.assertEqual( errors[0][1], 'format must be one of: csv, json.' )

    def testCountSchedule( self ):
        p = params.CountSchedule( name = 'sizes', value = '4:32:2' )
        self.assertEqual( p.getValue(), [ 4, 8, 16, 32 ] )

        p.setValue( '4,8.5' )
        self.assertFalse( p.isValid()[0] )

    def testListValidators( self ):
        p = params.Schedule( name = 'eps', value = '0.5,0.25,0.25', 
            validators = [ pv.Positive(), pv.StrictlyDecreasing() ] )
        self.assertEqual( p.isValid(), ( False, [ ( 'eps', 'eps must be strictly decreasing.' ) ] ) )

        p = params.RealList( name = 'c1', value = '1,2,3', validators = pv.Length( 2, 2 ) )
        self.assertEqual( p.isValid(), ( False, [ ( 'c1', 'c1 takes at most 2 values.' ) ] ) )

    def testClone( self ):
        p = params.Select([ 'a', 'b' ], name = 'kind', value = 'a', help = 'kind' )
        clone = p.clone()
        clone.setValue( 'b' )
        self.assertEqual( p.getValue(), 'a' )
        self.assertEqual( clone.getOptions(), [ 'a', 'b' ] )
        self.assertEqual( len( clone.getValidators() ), 1 )

    def testFlagAndFormat( self ):
        p = params.Count( name = 'past_cells', value = 48 )
        self.assertEqual( p.getFlag(), '--past-cells' )
        self.assertEqual( p.format([ 0.5, 0.25 ]), '0.5,0.25' )
        self.assertEqual( p.format( None ), '-' )

    def testArgument( self ):
        parser = argparse.ArgumentParser()
        params.Real( name = 'eps', value = 0.125 ).addArgument( parser )
        params.Switch( name = 'strict', value = False ).addArgument( parser )

        self.assertEqual( vars( parser.parse_args([]) ), { 'eps': None, 'strict': None } )
        self.assertEqual( vars( parser.parse_args([ '--eps', '1/8', '--strict' ]) ), 
            { 'eps': '1/8', 'strict': True } )

class ParameterSetTest( unittest.TestCase ):

    def testInheritedOrder( self ):
        names = commands.COMMANDS['angle'].getElementNames()
        self.assertEqual( names[:7], [ 'rtol', 'threads', 'format', 'out', 'strict', 'verbose', 'config' ] )
        self.assertEqual( names[7:], [ 'H', 't1', 't2', 'n', 'eps' ] )

    def testCloneKeepsSchema( self ):
        schema = commands.COMMANDS['angle']
        clone = schema.clone()
        clone.setValue({ 'H': '0.3' })

        self.assertEqual( clone.getParameter( 'H' ).getValue(), 0.3 )
        self.assertEqual( schema.getParameter( 'H' ).getValue(), 0.75 )
        self.assertEqual( clone.getName(), 'angle' )

    def testCrossValidators( self ):
        ps = commands.COMMANDS['angle'].clone()
        ps.setValue({ 't1': '1', 't2': '1' })
        valid, errors = ps.isValid()
        self.assertFalse( valid )
        self.assertEqual( errors[0][0], 't2' )

        ps = commands.COMMANDS['angle'].clone()
        ps.setValue({ 'eps': '0.75' })
        valid, errors = ps.isValid()
        self.assertEqual( [ name for name, msg in errors ], [ 'eps' ] )

    def testPastCoversWindow( self ):
        ps = commands.COMMANDS['thm22'].clone()
        ps.setValue({ 'T': '8' })
        self.assertEqual( [ name for name, msg in ps.isValid()[1] ], [ 'T' ] )

    def testParameterErrorsFirst( self ):
        ps = commands.COMMANDS['angle'].clone()
        ps.setValue({ 'H': '2', 'n': 'many' })
        with self.assertRaises( ValidationCollectionError ) as context:
            ps.validate()

        self.assertEqual( sorted( name for name, msg in context.exception.errors ), [ 'H', 'n' ] )

class RunConfigTest( unittest.TestCase ):

    def testMergeSources( self ):
        merged = mergeSources({ 'H': '0.3', 'n': '8' }, None, { 'H': '0.4', 'n': None })
        self.assertEqual( merged, { 'H': '0.4', 'n': '8' } )

    def testValues( self ):
        config = RunConfig( commands.COMMANDS['angle'], { 'H': '0.3', 'eps': '1/16' } )
        self.assertTrue( config.isValid() )
        self.assertEqual( config.get( 'H' ), 0.3 )
        self.assertEqual( config.get( 'eps' ), 0.0625 )
        self.assertEqual( config.getCommand(), 'angle' )
        self.assertEqual( config.H.getValue(), 0.3 )

    def testUnknownValues( self ):
        with self.assertRaises( ValidationError ) as context:
            RunConfig( commands.COMMANDS['angle'], { 'H': '0.3', 'seed': '4', 'hurst': '0.3' } )

        self.assertIn( 'hurst, seed', context.exception.msg )

    def testData( self ):
        config = RunConfig( commands.COMMANDS['angle'], { 'H': '0.3' } )
        data = dict( config.getData() )
        self.assertEqual( data['H'], '0.3' )
        self.assertEqual( data['out'], '-' )
        self.assertEqual( data['strict'], 'False' )
        self.assertEqual( config.getData()[0][0], 'rtol' )

    def testValidate( self ):
        config = RunConfig( commands.COMMANDS['mi'], { 'H': '1.5' } )
        self.assertEqual( config.isValid( return_list = True ), 
            ( False, [ ( 'H', 'H must lie in the open interval (0, 1).' ) ] ) )

        with self.assertRaises( ValidationCollectionError ):
            config.validate()

class DialectTest( unittest.TestCase ):

    def setUp( self ):
        self.directory = tempfile.mkdtemp()

    def tearDown( self ):
        shutil.rmtree( self.directory )

    # str
    def write( self, text ):
        path = os.path.join( self.directory, 'run.conf' )
        with open( path, 'w' ) as stream:
            stream.write( text )

        return path

    def testNamespace( self ):
        args = argparse.Namespace( H = '0.3', eps = None, strict = True )
        self.assertEqual( dialects.namespace( args ), { 'H': '0.3', 'strict': True } )

    def testConfigFile( self ):
        path = self.write( '# two windows\n\nH = 0.25\n--grid-n=32\npast-cells = 12\neps = 0.5:0.125:2\n' )
        self.assertEqual( dialects.configFile( path ), 
            { 'H': '0.25', 'grid_n': '32', 'past_cells': '12', 'eps': '0.5:0.125:2' } )

    def testMalformed( self ):
        with self.assertRaises( ValidationError ):
            dialects.configFile( self.write( 'H 0.25\n' ) )

        with self.assertRaises( ValidationError ):
            dialects.configFile( self.write( ' = 0.25\n' ) )

        with self.assertRaises( ValidationError ):
            dialects.configFile( os.path.join( self.directory, 'missing.conf' ) )

    def testFlatten( self ):
        self.assertEqual( dialects.flattenAbsData({ 'fit': { 'cos': { 'slope': 0.5 } }, 'name': 'scan' }), 
            { 'fit_cos_slope': 0.5, 'name': 'scan' } )

if __name__ == '__main__':
    unittest.main()
